#include "gemkit/code.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gemkit/errors.hpp"

namespace gemkit {

namespace {

bool looks_numeric(std::string_view text) {
  return std::any_of(text.begin(), text.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == ','; });
}

CodeEntries parse_letters(std::string_view text) {
  if (text.empty() || text.size() % 3 != 0) {
    throw GemError(ErrorKind::BadLength,
                   "code length " + std::to_string(text.size()) + " is not a positive multiple of 3");
  }
  const int p = static_cast<int>(text.size() / 3);
  if (p > kMaxLetterPairs) {
    throw GemError(ErrorKind::BadLength, "letter codes cover at most 26 vertex pairs; use the numeric form");
  }
  CodeEntries entries;
  entries.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < 'A' || ch >= 'A' + p) {
      std::string msg = "character '";
      msg += ch;
      msg += "' at position " + std::to_string(pos + 1) + " is not one of the first " + std::to_string(p) +
             " capital letters";
      throw GemError(ErrorKind::BadChar, msg);
    }
    entries.push_back(ch - 'A' + 1);
  }
  return entries;
}

CodeEntries parse_numbers(std::string_view text) {
  CodeEntries entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, end - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw GemError(ErrorKind::BadChar, "token '" + std::string(token) + "' is not a positive integer");
    }
    entries.push_back(value);
    start = end + 1;
  }
  if (entries.size() % 3 != 0) {
    throw GemError(ErrorKind::BadLength,
                   "numeric code has " + std::to_string(entries.size()) + " entries, not a multiple of 3");
  }
  const int p = static_cast<int>(entries.size() / 3);
  for (int value : entries) {
    if (value < 1 || value > p) {
      throw GemError(ErrorKind::BadChar, "label " + std::to_string(value) + " outside 1.." + std::to_string(p));
    }
  }
  return entries;
}

}  // namespace

Labeling identity_labeling(int order) {
  const int p = order / 2;
  Labeling out(order);
  for (int k = 0; k < p; ++k) {
    out[k] = -(k + 1);
    out[p + k] = k + 1;
  }
  return out;
}

ColoredGraph graph_from_entries(std::span<const int> entries) {
  const int p = static_cast<int>(entries.size() / 3);
  std::array<Involution, kColors> inv;
  for (auto& m : inv) m.assign(2 * p, -1);
  for (int i = 0; i < p; ++i) {
    inv[0][i] = p + i;
    inv[0][p + i] = i;
  }
  for (int c = 1; c < kColors; ++c) {
    for (int i = 0; i < p; ++i) {
      const int j = entries[(c - 1) * p + i] - 1;
      if (inv[c][p + j] != -1) {
        throw GemError(ErrorKind::NotInvolution, "block " + std::to_string(c) + " repeats label " +
                                                     std::to_string(j + 1) + ", so it is not a permutation");
      }
      inv[c][i] = p + j;
      inv[c][p + j] = i;
    }
  }
  return ColoredGraph(std::move(inv));
}

std::string render_code(std::span<const int> entries) {
  const int p = static_cast<int>(entries.size() / 3);
  std::string out;
  if (p <= kMaxLetterPairs) {
    out.reserve(entries.size());
    for (int e : entries) out.push_back(static_cast<char>('A' + e - 1));
    return out;
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(entries[k]);
  }
  return out;
}

ColoredGraph parse_code(std::string_view text) {
  const CodeEntries entries = looks_numeric(text) ? parse_numbers(text) : parse_letters(text);
  return graph_from_entries(entries);
}

CodeEntries code_entries(const ColoredGraph& g, std::span<const int> labeling) {
  if (!is_bipartite(g)) throw GemError(ErrorKind::NotBipartite, "only bipartite graphs have codes");
  const int n = g.order();
  const int p = n / 2;
  if (static_cast<int>(labeling.size()) != n) {
    throw GemError(ErrorKind::LabelingInvalid, "labeling size differs from graph order");
  }
  // negative[i-1] is the vertex labeled -i.
  std::vector<int> negative(p, -1), positive(p, -1);
  for (int v = 0; v < n; ++v) {
    const int label = labeling[v];
    if (label == 0 || label < -p || label > p) {
      throw GemError(ErrorKind::LabelingInvalid, "label " + std::to_string(label) + " out of range");
    }
    int& slot = label < 0 ? negative[-label - 1] : positive[label - 1];
    if (slot != -1) throw GemError(ErrorKind::LabelingInvalid, "label " + std::to_string(label) + " used twice");
    slot = v;
  }
  for (int i = 0; i < p; ++i) {
    if (g.neighbor(negative[i], 0) != positive[i]) {
      throw GemError(ErrorKind::LabelingInvalid,
                     "vertices -" + std::to_string(i + 1) + " and +" + std::to_string(i + 1) + " are not 0-adjacent");
    }
  }
  CodeEntries entries(3 * p);
  for (int c = 1; c < kColors; ++c) {
    for (int i = 0; i < p; ++i) {
      const int label = labeling[g.neighbor(negative[i], c)];
      if (label < 0) {
        throw GemError(ErrorKind::LabelingInvalid, "negative labels do not form one bipartition class");
      }
      entries[(c - 1) * p + i] = label;
    }
  }
  return entries;
}

std::string emit_code(const ColoredGraph& g, std::span<const int> labeling) {
  return render_code(code_entries(g, labeling));
}

}  // namespace gemkit

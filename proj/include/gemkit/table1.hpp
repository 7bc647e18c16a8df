#pragma once

#include <span>
#include <string_view>

namespace gemkit {

// One row of the published census of graph-complexity-14 manifolds with
// toric boundary. Names are written 14^k_n with k boundary components.
struct Table1Row {
  std::string_view name;
  std::string_view code;
  int boundary_components = 0;
  std::string_view link;  // "--" when the manifold is not a link complement

  bool link_complement() const noexcept { return link != "--"; }
};

std::span<const Table1Row> table1_rows();

// Bipartite order-12 graphs of tetrahedral manifolds built from 10 regular
// ideal tetrahedra.
struct TetrahedralBase {
  std::string_view name;
  std::string_view code;
  std::string_view manifold;
  int tetrahedra = 0;
};

std::span<const TetrahedralBase> tetrahedral_bases();

}  // namespace gemkit

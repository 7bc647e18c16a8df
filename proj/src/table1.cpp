#include "gemkit/table1.hpp"

#include <array>

namespace gemkit {

namespace {

constexpr std::array<Table1Row, 34> kRows{{
    {"14^2_1", "EABCDGFGDFEBCADGEFBAC", 2, "L6a3"},
    {"14^2_2", "DABCGEFGFECDBABGDFACE", 2, "see fig."},
    {"14^2_3", "GABCDEFEDGFABCDEFAGCB", 2, "L11n204"},
    {"14^3_1", "EABCDGFGEFCADBCEGAFBD", 3, "L12n1998"},
    {"14^3_2", "DABCGEFGFBADCEFCEAGDB", 3, "--"},
    {"14^3_3", "DABCGEFFDBECGAEDGCFAB", 3, "see fig."},
    {"14^3_4", "EABCDGFGDFEBCABDGAFEC", 3, "L8n6"},
    {"14^3_5", "DABCGEFGEFBDACFGEBACD", 3, "see fig."},
    {"14^3_6", "EABCDGFGFDABECCEFAGDB", 3, "--"},
    {"14^3_7", "EABCDGFGFDABECFDGBACE", 3, "see fig."},
    {"14^3_8", "DABCGEFGDFCABEBFDECGA", 3, "L13n9356"},
    {"14^3_9", "DABCGEFGEFBDACFCGABDE", 3, "L8n5"},
    {"14^3_10", "DABCGEFGDFBACECFAEDGB", 3, "L6a4"},
    {"14^4_1", "EABCDGFGFBACEDBCFDGAE", 4, "see fig."},
    {"14^4_2", "EABCDGFGBEDFACEFAGCDB", 4, "--"},
    {"14^4_3", "DABCGEFGCFADBEEGABCFD", 4, "see fig."},
    {"14^4_4", "EABCDGFGEFCADBBFDGEAC", 4, "L11n379"},
    {"14^4_5", "EABCDGFGFECABDCGDAFEB", 4, "see fig."},
    {"14^4_6", "EABCDGFGDFACEBBFEDGAC", 4, "--"},
    {"14^4_7", "EABCDGFGFDEBCAFDEGCAB", 4, "L14n63157"},
    {"14^4_8", "EABCDGFGFEBCDACGFEBAD", 4, "L14n61549"},
    {"14^4_9", "EABCDGFGDFEBCAFCGADEB", 4, "L14n62850"},
    {"14^4_10", "EABCDGFGFBEACDDCGAFEB", 4, "see fig."},
    {"14^4_11", "DABCGEFGEFBDACFGCABDE", 4, "L14n62541"},
    {"14^4_12", "EABCDGFGEFBDACCGAEFDB", 4, "see fig."},
    {"14^4_13", "EABCDGFGEFBDACBGCEFDA", 4, "see fig."},
    {"14^4_14", "EABCDGFGDFACEBFCEGBAD", 4, "L8a21"},
    {"14^4_15", "EABCDGFGFDABECFDEGCAB", 4, "L14n60227"},
    {"14^4_16", "EABCDGFGFEACBDCDFGAEB", 4, "L10n96"},
    {"14^4_17", "DABCGEFGEFBDACCGAFBDE", 4, "L11n456"},
    {"14^4_18", "DABCGEFGEFBDACFGEACDB", 4, "L14n63000"},
    {"14^5_1", "EABCDFGGFEBADCCDEGFAB", 5, "see fig."},
    {"14^5_2", "DABCGEFGFBADCEECFGABD", 5, "L12n2249"},
    {"14^5_3", "DABCGEFGCFADBECDEGAFB", 5, "L14n63769"},
}};

constexpr std::array<TetrahedralBase, 3> kBases{{
    {"Gamma_1", "DABCFEFEABDCCDEFAB", "otet10_00014", 10},
    {"Gamma_2", "FABCDEDEFABCCDEFAB", "otet10_00028", 10},
    {"Gamma_3", "DABCFEFEDABCBCFEDA", "otet10_00027", 10},
}};

}  // namespace

std::span<const Table1Row> table1_rows() { return kRows; }

std::span<const TetrahedralBase> tetrahedral_bases() { return kBases; }

}  // namespace gemkit

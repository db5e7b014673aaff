#ifndef MKB_FIXTURES_HPP
#define MKB_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

namespace mkb {

// Embedded case-study data (see src/fixture_data.cpp).  Names:
//   jg7, jlex7, cubic7, f32_dim7, gtau_dim7, points8_dim7,
//   jg5, jlex5, f17_dim5, gT_dim5, points3_dim5,
//   appendix_u, appendix_C0, appendix_elim, ideal_a,
//   f3_paramset, f3_point1, f3_point2
const std::vector<std::pair<std::string, const char*>>& fixture_table();

// throws std::runtime_error for unknown names
const char* fixture_text(const std::string& name);

}  // namespace mkb

#endif

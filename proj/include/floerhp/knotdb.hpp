#pragma once

#include <string>
#include <vector>

#include "floerhp/casson.hpp"

namespace floerhp::knotdb {

// Knot database format: a UTF-8 JSON array of records such as
//   {"name":"trefoil-r","alexander":[1,-1,1],"two_bridge":[3,1],
//    "boundary_slopes":["0/1","6/1"],"irregular_slopes":[],
//    "seminorm":[{"coeff":"1","slope":"6/1"}],"E0":"0","E1":"1/2",
//    "small":true}
// Rationals are "a/b" strings (the "/b" may be omitted when b = 1).
// two_bridge and irregular_slopes are optional; unknown fields are rejected.
// Every violation raises DataError naming the offending field.
std::vector<casson::KnotRecord> parse_records(const std::string& json_text);

std::vector<casson::KnotRecord> load_records(const std::string& path);

// Resolves a knot by name: file records first, then the built-in trefoils.
const casson::KnotRecord& resolve(const std::string& name,
                                  const std::vector<casson::KnotRecord>& file_records);

}  // namespace floerhp::knotdb

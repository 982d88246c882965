#pragma once

// JSON and text rendering shared by the CLI, the golden corpus and tests.
// Elements are integers over prime fields and coefficient arrays otherwise.

#include <string>
#include <vector>

#include "json.hpp"
#include "qgoppa/oracle.hpp"
#include "qgoppa/quantum.hpp"

namespace qgoppa::cli {

using json = nlohmann::ordered_json;

json to_json(const Field& f);
Field field_from_json(const json& j);

json to_json(const Field& f, Elem x);
Elem elem_from_json(const Field& f, const json& j);
json to_json(const Field& f, std::span<const Elem> v);
Vec vec_from_json(const Field& f, const json& j);
json to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, std::size_t cols);

json to_json(const Curve& c, const Place& p);
Place place_from_json(const Field& f, const json& j);
json places_json(const Curve& c);
std::vector<Place> places_from_json(const Field& f, const json& j);

json to_json(const GoppaCode& g, std::optional<std::size_t> d = std::nullopt);
json to_json(const StabilizerCode& s);
// With validate = false the generator is taken as is, so verify can report
// on codes that are not self-orthogonal.
StabilizerCode stabilizer_from_json(const json& j, bool validate = true);

json to_json(const oracle::VerificationReport& r);

// Text layout used by reports: "[ a b | c d ]" rows.
std::string places_text(const Curve& c);
std::string goppa_text(const GoppaCode& g, std::optional<std::size_t> d = std::nullopt);
std::string stabilizer_text(const StabilizerCode& s);

// "7" or "3,2:1,w^2:2" = 3 P_inf + 1 R(x=2) + 2 R(x=w^2).
Divisor parse_divisor(const Field& f, std::string_view text);
std::string divisor_string(const Field& f, const Divisor& d);

}  // namespace qgoppa::cli

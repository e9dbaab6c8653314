#ifndef GSM_JSON_REPORT_HPP
#define GSM_JSON_REPORT_HPP

#include <gsm/duality.hpp>
#include <gsm/morita.hpp>

#include <json.hpp>

#include <string>

namespace gsm {

using Json = nlohmann::json;

/// Keys sorted, two-space indent, trailing newline.
std::string emit_json(const Json& j);

Json scalar_json(const Scalar& q);
Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);
Json error_json(const Error& e);

Json groupoid_json(const FiniteGroupoid& g);
Json algebra_json(const StructureAlgebra& a);
Json graded_json(const GradedAlgebra& ga);
Json action_json(const GSetAction& a);
Json module_json(const XGradedModule& m);

Json duality_json(const DualityReport& r);
Json morita_json(const MoritaContext& ctx, const StrictnessReport& s);

}  // namespace gsm

#endif  // GSM_JSON_REPORT_HPP

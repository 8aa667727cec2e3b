#pragma once

// JSON encodings shared by the command-line tool and the test fixtures.
// Every top-level document carries "format": 1 and a "kind" tag; scalars use
// the text form of Scalar::to_string / Scalar::parse. Decoding failures throw
// FormatError, and domain violations surface as the owning module's error.

#include <nlohmann/json.hpp>

#include "pmonoid/action.hpp"
#include "pmonoid/exterior.hpp"
#include "pmonoid/hinge.hpp"
#include "pmonoid/limits.hpp"
#include "pmonoid/monoid.hpp"

namespace pmonoid::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const RawSeq& a);
/// Terms are the zero-extended maps; the chain is stored alongside.
json to_json(const MSeq& a);
json to_json(const PMSeq& a);
json to_json(const EpsFamily& f);
json to_json(const ProjPoint& x);
json to_json(const LinearRelation& p);
json to_json(const Hinge& h);
json to_json(const WedgeMap& w);
json to_json(const LambdaVector& l);

Scalar scalar_from_json(const json& j);
Matrix matrix_from_json(const json& j);
Subspace subspace_from_json(const json& j);
RawSeq raw_from_json(const json& j);
MSeq mseq_from_json(const json& j);
PMSeq pmseq_from_json(const json& j);
/// Any sequence document: "raw" (or untagged) inputs go through pi.
MSeq sequence_from_json(const json& j);
EpsFamily family_from_json(const json& j);
ProjPoint point_from_json(const json& j);
/// Either a bare list of points or {"points": [...]}.
std::vector<ProjPoint> points_from_json(const json& j);
LinearRelation relation_from_json(const json& j);
Hinge hinge_from_json(const json& j);
WedgeMap wedge_from_json(const json& j);
LambdaVector lambda_from_json(const json& j);

}  // namespace pmonoid::io

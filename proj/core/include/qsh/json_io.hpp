#pragma once

#include <json.hpp>

#include "qsh/classify.hpp"
#include "qsh/tila.hpp"
#include "qsh/torsion.hpp"

namespace qsh {

using Json = nlohmann::json;

// Wire formats. Quaternions encode as ["w","x","y","z"] with rational string
// components; matrices as {"rows", "cols", "entries"} row-major.
Json to_json(const Rational& r);
Json to_json(const Quat& q);
Json to_json(const QMat& m);
Json to_json(const QVec& v);
Json to_json(const RatVec& v);
Json to_json(const RatMat& m);
Json to_json(const SkewForm& form);
Json to_json(const Subspace& s);
Json to_json(const LiePresentation& p);
Json to_json(const TauElement& tau);
Json to_json(const AmbientElement& e);

Rational rational_from_json(const Json& j);
Quat quat_from_json(const Json& j);
QMat qmat_from_json(const Json& j);
QVec qvec_from_json(const Json& j);
SkewForm skewform_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
LiePresentation presentation_from_json(const Json& j);
/// Parses {"n", "form", "a", "A", "d", "C"?}. Validates shapes, Re(a) = 0 and
/// A* jj + jj A = 0; throws std::invalid_argument with the failed condition.
TauElement tau_from_json(const Json& j);
AmbientElement ambient_from_json(const Json& j);

/// Verification record of a constructed tila, per the published schema.
Json verification_record(const Tila& t, const CoordinateLabels* labels = nullptr);

Json to_json(const NormalizedTriple& t);
Json to_json(const ClassOutcome& o);

}  // namespace qsh

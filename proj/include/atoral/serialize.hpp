#pragma once

#include "atoral/gap.hpp"
#include "atoral/lacunary.hpp"
#include "atoral/poly_json.hpp"
#include "atoral/quasi_inverse.hpp"
#include "atoral/torus.hpp"

namespace atoral {

json to_json(const LatticePoint& p);
LatticePoint lattice_point_from_json(const json& j);
json to_json(const SupportSet& s);

json to_json(const TorusPoint& t);
json to_json(const TorusCertificate& c);
json to_json(const D1Classification& c);
json to_json(const AdjointComparison& c);

json to_json(const QuasiInverse& q);
QuasiInverse quasi_inverse_from_json(const json& j);

json to_json(const ProofTrace& t);
json to_json(const GapCertificate& c);

json to_json(const SpacedConfiguration& c);
json to_json(const SpacedDivisibilityReport& r);
json to_json(const GapSearchReport& r);
json to_json(const IndependenceReport& r);
json to_json(const SumsetReport& r);
json to_json(const FactorizationReport& r);
json to_json(const FrobeniusReport& r);

}  // namespace atoral

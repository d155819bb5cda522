#pragma once

#include <json.hpp>

#include <string>

#include "dioph/abc/abc.hpp"
#include "dioph/abc/waring.hpp"
#include "dioph/classfield/classfield.hpp"
#include "dioph/contfrac/contfrac.hpp"
#include "dioph/contfrac/pell.hpp"
#include "dioph/logforms/logforms.hpp"
#include "dioph/pade/pade.hpp"
#include "dioph/reduction/reduction.hpp"
#include "dioph/solvers/expgap.hpp"
#include "dioph/solvers/mordell.hpp"
#include "dioph/solvers/quadruple.hpp"
#include "dioph/solvers/squbes.hpp"
#include "dioph/solvers/thue.hpp"

namespace dioph {
namespace io {

// All emitters follow the same conventions: big integers as decimal strings,
// rationals as "p/q", interval endpoints as dyadic "m*2^e" strings.  Output
// is built with ordered keys so identical inputs give identical bytes.
using json = nlohmann::ordered_json;

json to_json(const Interval& iv);
json to_json(const Real& r);
json to_json(const cf::ContinuedFraction& cf);
json to_json(const cf::PellSolution& p);
json to_json(const logforms::BoundResult& b);
json to_json(const reduction::ReductionProblem& p);
json to_json(const reduction::ReductionCertificate& c);
json to_json(const reduction::FixpointResult& f, const reduction::ReductionProblem& p);
json to_json(const solvers::SqubeList& s);
json to_json(const solvers::MordellSolutionSet& m);
json to_json(const solvers::ThueSolutionSet& t);
json to_json(const solvers::ExpGapResult& e);
json to_json(const solvers::QuadrupleReport& q);
json to_json(const pade::PadePair& p);
json to_json(const pade::MeasureCheck& m);
json to_json(const classnum::FormClassCount& f);
json to_json(const classnum::NearInteger& n);
json to_json(const abc::AbcTriple& t);
json to_json(const abc::RefinementCheck& r);
json to_json(const abc::ScanReport& s);
json to_json(const abc::WaringReport& w);

reduction::ReductionProblem problem_from_json(const json& j);
reduction::ReductionCertificate certificate_from_json(const json& j);

// Writes a self-contained certificate file for later replay.
void save_certificate(const json& report, const std::string& path);

// Replays a saved certificate file with fresh arithmetic.  Returns true and
// a summary on success; false with the first failure reason otherwise.
bool verify_certificate_file(const std::string& path, std::string& summary);

}  // namespace io
}  // namespace dioph

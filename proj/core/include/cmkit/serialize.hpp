#ifndef CMKIT_SERIALIZE_HPP
#define CMKIT_SERIALIZE_HPP

#include <string>
#include <vector>

#include "cmkit/curves.hpp"
#include "cmkit/motive.hpp"
#include "cmkit/quadfield.hpp"
#include "cmkit/ranks.hpp"

namespace cmkit {

// JSON report builders for the CLI. All integers are serialized as
// decimal strings, keys keep a fixed order, and no floating point is
// ever emitted, so identical inputs produce byte-identical documents.

/// Parses a curve spec file: either
///   {"p": "5", "e": "1", "model": "short-weierstrass", "A": "1", "B": "0"}
/// or
///   {"q": "5", "zeta_numerator": ["1", "-2", "5"]}
/// Unknown keys are rejected. Errors with BadInput on malformed
/// documents and propagates validation errors.
CurveDescriptor parse_curve_spec(const std::string& json_text);

std::string classify_report(const EllipticCurveData& e);
std::string zeta_report(const ZetaFunction& z, unsigned power,
                        const CurveDescriptor* base);

/// Decomposition report carrying both multiplicity views: the level
/// multiset and the printed-recurrence table, with notes wherever the
/// two disagree.
std::string decompose_report(unsigned g, Level level);
/// Round-trip parser for the "entries"/"level" part of the
/// decomposition report.
SummandMultiset parse_summand_multiset(const std::string& json_text);

std::string tate_report(unsigned g, unsigned i, std::uint64_t dim,
                        const std::vector<RankWitness>& witnesses,
                        const CurveDescriptor* base);
std::string picard_report(unsigned g, std::uint64_t picard, const CurveDescriptor* base);
std::string bb_report(unsigned g, unsigned i, std::uint64_t rank,
                      const std::vector<RankWitness>& witnesses);
std::string lcheck_report(unsigned order, const EulerCheckResult& r);
std::string weil_verify_report(const EllipticCurveData& e, unsigned max_r, unsigned max_s,
                               const WeilRelationReport& rep);
std::string match_report(const MatchResult& r);
std::string error_report(const std::string& code, const std::string& detail);

/// Parses the match input document:
///   {"q": "113", "left": [{"m": "-1", "r": "2", "s": "0"}, ...],
///    "right": [...]}
struct MatchInput {
  mpz_class q;
  mpz_class p;
  std::vector<DecompEntry> left, right;
};
MatchInput parse_match_input(const std::string& json_text);

}  // namespace cmkit

#endif

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncwitt/cuntz_deninger.hpp"
#include "ncwitt/json_io.hpp"
#include "ncwitt/matrix.hpp"
#include "ncwitt/necklace.hpp"

namespace ncwitt {

/// Outcome of one exact check at one prime. A verdict of "holds" is emitted
/// only when the exact-arithmetic check passes; there are no tolerances
/// anywhere. The payload (everything except the wall time) is deterministic
/// and bit-identical across runs.
struct VerificationReport {
    std::string check; // "lemma-trace" | "lemma-necklace" | "thm-1-1" | "thm-1-2"
    mpz_class prime;
    std::optional<std::size_t> trunc;
    bool holds = false;
    json witness;
    double wall_ms = 0.0;

    json payload() const; // deterministic part, no wall time
    json to_json() const; // payload plus wall time
    std::string to_text() const;
};

/// The 2x2 witness pair over F_p: R the lower shift [[0,0],[1,0]] assigned to
/// the first generator, S the upper shift [[0,1],[0,0]] to the second.
MatrixAssignment shift_pair_assignment(const GeneratorSetPtr& gens, const mpz_class& p);

/// "lemma-trace": with the shift pair, trace(eval(X^p Y^p - (XY)^p)) over F_p
/// must equal -1 mod p. The trace functional kills commutators, so a nonzero
/// value certifies X^p Y^p ≠ (XY)^p mod [A,A] over F_p.
VerificationReport verify_trace(const mpz_class& p);

/// "lemma-necklace": project((XY)^p - X^p Y^p mod p) must be nonzero; the
/// witness is the resulting two-term necklace class. Also cross-links to the
/// trace certificate of the same fact.
VerificationReport verify_necklace(const mpz_class& p);

/// The mod-p congruence any ghost image of an integer Witt vector satisfies:
/// coordinate 1 must be the p-power class of coordinate 0 in A/([A,A]+pA).
/// Returns frobenius_p(class of g[0]) - class of g[1]; nonzero = obstruction.
NecklacePoly frobenius_gap(const GhostVector& g);
NecklacePoly frobenius_gap(const std::vector<FreePoly>& v, const mpz_class& p);

/// "thm-1-1": gamma_bar of the realized witness <X><Y> violates the
/// coordinate-1 congruence, so it has no preimage under the Witt ghost map;
/// the single Teichmuller <X*Y> is the negative control and must satisfy it.
VerificationReport verify_obstruction_gamma(const mpz_class& p, std::size_t n);

/// "thm-1-2": the same congruence violation through eta_bar on the formal
/// E-element <[X]><[Y]>, with the same negative control.
VerificationReport verify_obstruction_eta(const mpz_class& p, std::size_t n);

VerificationReport verify_by_name(const std::string& check, const mpz_class& p,
                                  std::size_t trunc);

/// All four checks for every prime <= max_prime, ascending. Checks are pure,
/// so primes are evaluated concurrently; ordering is by prime regardless of
/// completion order.
std::vector<VerificationReport> verify_sweep(const mpz_class& max_prime,
                                             std::size_t trunc = 2);

std::vector<mpz_class> primes_up_to(const mpz_class& bound);

} // namespace ncwitt

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sigforge/knot_sig.hpp"

namespace sigforge {

// One infection of the identity cylinder: the infection curve sits at lower
// central depth n-1 with no power at depth n (declared data, not computed),
// so the knot's rho0 enters every rho_i with i >= depth and nothing below.
struct InfectionRecord {
    long depth;  // >= 2
    SeifertMatrix knot;

    InfectionRecord(long depth_, SeifertMatrix knot_);
    bool operator==(const InfectionRecord&) const = default;
};

// A homology cylinder over Sigma_{g,1} built from the identity cylinder by an
// ordered list of infections. Immutable; the empty list is the identity.
class InfectionScript {
public:
    explicit InfectionScript(long genus = 1, std::vector<InfectionRecord> records = {});

    long genus() const { return genus_; }
    const std::vector<InfectionRecord>& records() const { return records_; }

    InfectionScript appended(InfectionRecord r) const;
    InfectionScript concatenated(const InfectionScript& o) const;

    // Accumulated rho0 per depth, zero contributions dropped: two scripts are
    // interchangeable for every rho_i exactly when these agree.
    std::map<long, Rational> ledger() const;

    // Homology-cobordism-style equality: full ledgers agree.
    bool operator==(const InfectionScript& o) const { return ledger() == o.ledger(); }

private:
    long genus_;
    std::vector<InfectionRecord> records_;
};

// rho_i of the script: sum of rho0(knot) over records with depth <= i.
// The identity cylinder contributes 0. Requires i >= 2.
Rational rho_n(const InfectionScript& script, long i);

// A single record at depth max(indices) carrying the c-fold connected sum of
// right trefoils, with c minimal such that the requested combination exceeds
// D; every rho_j with 2 <= j < max(indices) vanishes on it.
InfectionScript independence_witness(const std::vector<long>& indices,
                                     const std::vector<Rational>& coeffs, const Rational& D);

// A script whose rho value approximates `target` within `tolerance` using the
// shipped knots (reachable values form the lattice (4/3)Z); empty when the
// lattice cannot reach the target, which the caller must treat as an
// "insufficient knot basis" outcome.
std::optional<InfectionScript> density_sample(const Rational& target, const Rational& tolerance,
                                              long depth = 2);

}  // namespace sigforge

#include "sigforge/cylinders.hpp"

#include <stdexcept>

namespace sigforge {

InfectionRecord::InfectionRecord(long depth_, SeifertMatrix knot_)
    : depth(depth_), knot(std::move(knot_))
{
    if (depth < 2) throw std::invalid_argument("InfectionRecord: depth must be >= 2");
}

InfectionScript::InfectionScript(long genus, std::vector<InfectionRecord> records)
    : genus_(genus), records_(std::move(records))
{
    if (genus_ < 1) throw std::invalid_argument("InfectionScript: genus must be >= 1");
}

InfectionScript InfectionScript::appended(InfectionRecord r) const
{
    std::vector<InfectionRecord> rec = records_;
    rec.push_back(std::move(r));
    return InfectionScript(genus_, std::move(rec));
}

InfectionScript InfectionScript::concatenated(const InfectionScript& o) const
{
    std::vector<InfectionRecord> rec = records_;
    rec.insert(rec.end(), o.records_.begin(), o.records_.end());
    return InfectionScript(genus_, std::move(rec));
}

std::map<long, Rational> InfectionScript::ledger() const
{
    std::map<long, Rational> acc;
    for (const auto& r : records_) acc[r.depth] += rho0(r.knot);
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

Rational rho_n(const InfectionScript& script, long i)
{
    if (i < 2) throw std::invalid_argument("rho_n: defined on the lower-central tower from i = 2");
    Rational total(0);
    for (const auto& r : script.records())
        if (r.depth <= i) total += rho0(r.knot);
    return total;
}

InfectionScript independence_witness(const std::vector<long>& indices,
                                     const std::vector<Rational>& coeffs, const Rational& D)
{
    if (indices.empty() || indices.size() != coeffs.size())
        throw std::invalid_argument("independence_witness: indices/coeffs must be nonempty and equal length");
    for (size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 2)
            throw std::invalid_argument("independence_witness: indices must be >= 2");
        if (i + 1 < indices.size() && indices[i] >= indices[i + 1])
            throw std::invalid_argument("independence_witness: indices must be strictly increasing");
        if (coeffs[i] == 0)
            throw std::invalid_argument("independence_witness: zero coefficient rejected");
    }
    if (D <= 0) throw std::invalid_argument("independence_witness: bound must be positive");

    const long depth = indices.back();
    const Rational top_coeff = coeffs.back();
    const SeifertMatrix trefoil = builtin_knot("trefoil_right");
    const Rational rho_trefoil = rho0(trefoil);  // -4/3

    SeifertMatrix knot;  // unknot
    for (long c = 1;; ++c) {
        knot = connected_sum(knot, trefoil);
        if (abs(top_coeff * Rational(c) * rho_trefoil) > D)
            return InfectionScript(1, {InfectionRecord(depth, knot)});
    }
}

std::optional<InfectionScript> density_sample(const Rational& target, const Rational& tolerance,
                                              long depth)
{
    if (tolerance <= 0) throw std::invalid_argument("density_sample: tolerance must be positive");
    const SeifertMatrix right = builtin_knot("trefoil_right");  // rho0 = -4/3
    const SeifertMatrix left = builtin_knot("trefoil_left");    // rho0 = +4/3
    const Rational step = rho0(left);
    // nearest lattice point k * step to target
    Rational ratio = target / step;
    Integer k_floor;
    mpz_fdiv_q(k_floor.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
    long best_k = 0;
    Rational best_err(-1);
    for (long k : {k_floor.get_si(), k_floor.get_si() + 1}) {
        Rational err = abs(Rational(k) * step - target);
        if (best_err < 0 || err < best_err) {
            best_err = err;
            best_k = k;
        }
    }
    if (best_err > tolerance) return std::nullopt;
    std::vector<InfectionRecord> records;
    const SeifertMatrix& knot = best_k >= 0 ? left : right;
    for (long i = 0; i < std::abs(best_k); ++i) records.emplace_back(depth, knot);
    return InfectionScript(1, std::move(records));
}

}  // namespace sigforge

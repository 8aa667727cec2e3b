#include "pmonoid/monoid.hpp"

#include <string>

#include "pmonoid/errors.hpp"

namespace pmonoid {

RawSeq RawSeq::make(std::vector<Matrix> terms) {
    if (terms.empty()) throw InvalidSequence("a sequence needs at least one term");
    const std::size_t n = terms.front().rows();
    Subspace common = Subspace::full(n);
    for (const auto& t : terms) {
        if (t.rows() != n || t.cols() != n) throw DimensionMismatch("sequence terms must all be n x n");
        common = intersect(common, kernel(t));
    }
    if (!common.is_zero()) {
        throw CommonKernelNonzero("common kernel has dimension " + std::to_string(common.dim()));
    }
    return RawSeq(n, std::move(terms));
}

std::vector<Subspace> RawSeq::running_kernels() const {
    std::vector<Subspace> out;
    out.reserve(terms_.size());
    Subspace k = Subspace::full(n_);
    for (const auto& t : terms_) {
        k = intersect(k, kernel(t));
        out.push_back(k);
    }
    return out;
}

MSeq MSeq::from_maps(std::size_t n, std::vector<Matrix> maps) {
    std::vector<Subspace> chain{Subspace::full(n)};
    for (const auto& a : maps) {
        if (a.cols() != chain.back().dim()) {
            throw InvalidSequence("map " + std::to_string(chain.size() - 1) + " does not match its domain");
        }
        chain.push_back(kernel_on(a, chain.back()));
    }
    return make(n, std::move(chain), std::move(maps));
}

MSeq MSeq::make(std::size_t n, std::vector<Subspace> chain, std::vector<Matrix> maps) {
    if (maps.empty()) throw InvalidSequence("a sequence needs at least one term");
    if (chain.size() != maps.size() + 1) throw InvalidSequence("chain length must be one more than the term count");
    if (chain.front() != Subspace::full(n)) throw InvalidSequence("chain must start at the full space");
    if (!chain.back().is_zero()) throw InvalidSequence("chain must end at zero");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const std::string where = "term " + std::to_string(i);
        if (chain[i + 1].ambient_dim() != n) throw InvalidSequence(where + ": chain ambient dimension mismatch");
        if (chain[i + 1].dim() >= chain[i].dim() || !contains(chain[i], chain[i + 1])) {
            throw InvalidSequence(where + ": chain is not strictly decreasing");
        }
        if (maps[i].rows() != n || maps[i].cols() != chain[i].dim()) {
            throw InvalidSequence(where + ": map shape does not match its domain");
        }
        if (maps[i].is_zero()) throw InvalidSequence(where + ": map is zero");
        if (kernel_on(maps[i], chain[i]) != chain[i + 1]) {
            throw InvalidSequence(where + ": kernel differs from the next chain member");
        }
    }
    return MSeq(n, std::move(chain), std::move(maps));
}

std::vector<std::size_t> MSeq::chain_dims() const {
    std::vector<std::size_t> dims;
    dims.reserve(chain_.size());
    for (const auto& v : chain_) dims.push_back(v.dim());
    return dims;
}

Matrix MSeq::zero_extension(std::size_t i) const {
    return maps_[i] * orthogonal_projection_coords(chain_[i]);
}

Vector MSeq::apply(std::size_t i, std::span<const Scalar> x) const { return apply_on(maps_[i], chain_[i], x); }

Matrix normalize_leading(const Matrix& m) {
    const Scalar* lead = m.leading_entry();
    if (lead == nullptr || lead->is_one()) return m;
    return m * lead->inverse();
}

RawSeq psi(const RawSeq& a) {
    std::vector<Matrix> kept;
    Subspace running = Subspace::full(a.n());
    for (const auto& t : a.terms()) {
        if (running.is_zero()) break;
        Subspace next = intersect(running, kernel(t));
        if (next.dim() < running.dim()) {
            kept.push_back(t);
            running = std::move(next);
        }
    }
    return RawSeq::make(std::move(kept));
}

MSeq pi(const RawSeq& a) {
    std::vector<Matrix> maps;
    std::vector<Subspace> chain{Subspace::full(a.n())};
    const RawSeq kept = psi(a);
    for (const auto& t : kept.terms()) {
        const Subspace& domain = chain.back();
        Matrix restricted = restrict(t, domain);
        Subspace next = kernel_on(restricted, domain);
        maps.push_back(std::move(restricted));
        chain.push_back(std::move(next));
    }
    return MSeq::make(a.n(), std::move(chain), std::move(maps));
}

RawSeq mul_raw(const RawSeq& a, const RawSeq& b) {
    if (a.n() != b.n()) throw DimensionMismatch("mul_raw: factors act on different dimensions");
    std::vector<Matrix> terms;
    terms.reserve(a.length() * b.length());
    for (const auto& bj : b.terms()) {
        for (const auto& ai : a.terms()) terms.push_back(ai * bj);
    }
    return RawSeq::make(std::move(terms));
}

PMSeq projectivize(const MSeq& a) {
    std::vector<Matrix> maps;
    maps.reserve(a.length());
    for (const auto& m : a.maps()) maps.push_back(normalize_leading(m));
    return PMSeq(MSeq::make(a.n(), a.chain(), std::move(maps)));
}

RawSeq lift(const MSeq& a) {
    std::vector<Matrix> terms;
    terms.reserve(a.length());
    for (std::size_t i = 0; i < a.length(); ++i) terms.push_back(a.zero_extension(i));
    return RawSeq::make(std::move(terms));
}

MSeq mul(const MSeq& a, const MSeq& b) { return pi(mul_raw(lift(a), lift(b))); }

PMSeq mul(const PMSeq& a, const PMSeq& b) { return projectivize(mul(a.seq(), b.seq())); }

PMSeq mul_with_lift(const PMSeq& a, const PMSeq& b, const LiftStrategy& lift_term) {
    auto lifted = [&](const MSeq& s) {
        std::vector<Matrix> terms;
        for (std::size_t i = 0; i < s.length(); ++i) terms.push_back(lift_term(s, i));
        return RawSeq::make(std::move(terms));
    };
    return projectivize(pi(mul_raw(lifted(a.seq()), lifted(b.seq()))));
}

bool is_invertible(const PMSeq& a) { return a.length() == 1 && rank(a.maps().front()) == a.n(); }

}  // namespace pmonoid

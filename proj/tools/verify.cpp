#include "verify.hpp"

#include <functional>
#include <random>
#include <utility>

#include "pmonoid/fixtures.hpp"
#include "pmonoid/json_io.hpp"
#include "pmonoid/pmonoid.hpp"

namespace pmonoid::cli {

namespace {

namespace fx = pmonoid::fixtures;

Vector e(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

Subspace span_of(std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<std::size_t> v(idx);
    return Subspace::coordinate(n, v);
}

PMSeq ppi(std::vector<Matrix> terms) { return projectivize(pi(RawSeq::make(std::move(terms)))); }

Vector concat(const Vector& a, const Vector& b) {
    Vector v = a;
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

// P0 = graph(A0) and P2 = span{(e2, e2)} + (0 ⊕ span{e1}) for the 2x2 case.
Hinge expected_hinge() {
    const Vector z(2);
    auto p0 = LinearRelation(Subspace::span(4, std::vector<Vector>{concat(e(2, 0), e(2, 0)), concat(e(2, 1), z)}));
    auto p2 = LinearRelation(Subspace::span(4, std::vector<Vector>{concat(e(2, 1), e(2, 1)), concat(z, e(2, 0))}));
    return Hinge::make({p0, p2});
}

using Check = std::function<bool(std::string&)>;

std::vector<std::pair<std::string, Check>> catalogue(std::uint64_t seed) {
    std::vector<std::pair<std::string, Check>> c;

    c.emplace_back("linalg/kernel-of-projection", [](std::string&) {
        return kernel(fx::order_dependence::A()) == span_of(2, {1});
    });
    c.emplace_back("linalg/image-of-nilpotent", [](std::string&) {
        return image(fx::order_dependence::B()) == span_of(2, {0});
    });
    c.emplace_back("linalg/orthocomplement-pencil3", [](std::string&) {
        return orthocomplement_in(span_of(3, {1, 2}), Subspace::full(3)) == span_of(3, {0});
    });
    c.emplace_back("linalg/restrict-pencil3", [](std::string&) {
        const Matrix expected{{1, 1}, {1, -1}, {1, -1}};
        return restrict(fx::pencil3::A1(), span_of(3, {1, 2})) == expected;
    });
    c.emplace_back("monoid/raw-order-dependence-valid", [](std::string&) {
        RawSeq a = RawSeq::make({fx::order_dependence::A(), fx::order_dependence::B()});
        return a.length() == 2;
    });
    c.emplace_back("monoid/psi-mh-not-closed", [](std::string&) {
        using namespace fx::mh_not_closed;
        RawSeq prod = mul_raw(RawSeq::make({B0(), B1()}), RawSeq::make({A0(), A1()}));
        return psi(prod) == RawSeq::make({B0() * A0(), B0() * A1()});
    });
    c.emplace_back("monoid/psi-discontinuity", [](std::string&) {
        using namespace fx::discontinuity;
        RawSeq prod = mul_raw(RawSeq::make({A0(), A1()}), RawSeq::make({B0(), B1()}));
        return (A0() * B0()).is_zero() && (A1() * B1()).is_zero() &&
               psi(prod) == RawSeq::make({A1() * B0(), A0() * B1()});
    });
    c.emplace_back("monoid/pi-order-dependence", [](std::string& why) {
        using namespace fx::order_dependence;
        MSeq ab = pi(RawSeq::make({A(), B()}));
        MSeq ba = pi(RawSeq::make({B(), A()}));
        if (ab.chain()[1] != span_of(2, {1}) || ba.chain()[1] != span_of(2, {0})) {
            why = "unexpected kernel chains";
            return false;
        }
        return !(projectivize(ab) == projectivize(ba));
    });
    c.emplace_back("monoid/mul-raw-term-order", [](std::string&) {
        const std::vector<Matrix> as{fx::hinge_limit::A0(), fx::hinge_limit::A1(), fx::hinge_limit::A2()};
        const std::vector<Matrix> bs{fx::discontinuity::B0(), fx::discontinuity::B1()};
        RawSeq prod = mul_raw(RawSeq::make(as), RawSeq::make(bs));
        if (prod.length() != 6) return false;
        for (std::size_t j = 0; j < bs.size(); ++j)
            for (std::size_t i = 0; i < as.size(); ++i)
                if (!(prod[as.size() * j + i] == as[i] * bs[j])) return false;
        return true;
    });
    c.emplace_back("monoid/mul-of-limits-discontinuity", [](std::string&) {
        using namespace fx::discontinuity;
        return mul(ppi({A0(), A1()}), ppi({B0(), B1()})) == ppi({A1() * B0(), A0() * B1()});
    });
    c.emplace_back("monoid/two-term-not-unit", [](std::string&) {
        using namespace fx::discontinuity;
        return !is_invertible(ppi({A0(), A1()}));
    });
    c.emplace_back("action/order-dependence-e2", [](std::string&) {
        using namespace fx::order_dependence;
        return phi_apply(ppi({A(), B()}), ProjPoint(e(2, 1))) == ProjPoint(e(2, 0));
    });
    c.emplace_back("action/order-dependence-equal-maps", [seed](std::string&) {
        using namespace fx::order_dependence;
        std::vector<ProjPoint> pts{ProjPoint(e(2, 0)), ProjPoint(e(2, 1)), ProjPoint({1, 1}),
                                   ProjPoint({1, Scalar::i()})};
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> coord(-9, 9);
        while (pts.size() < 54) {
            Vector v{Scalar(mpq_class(coord(rng)), mpq_class(coord(rng))),
                     Scalar(mpq_class(coord(rng)), mpq_class(coord(rng)))};
            if (!is_zero(v)) pts.emplace_back(std::move(v));
        }
        return maps_equal_on(ppi({A(), B()}), ppi({B(), A()}), pts);
    });
    c.emplace_back("limits/pencil3", [](std::string&) {
        using namespace fx::pencil3;
        PMSeq lim = limit(EpsFamily::make({A0(), A1()}));
        const Subspace v1 = span_of(3, {1, 2});
        MSeq expected = MSeq::make(3, {Subspace::full(3), v1, Subspace::zero(3)}, {A0(), restrict(A1(), v1)});
        return lim == projectivize(expected);
    });
    c.emplace_back("limits/hinge-family", [](std::string&) {
        using namespace fx::hinge_limit;
        return limit(EpsFamily::make({A0(), A1(), A2()})) == ppi({A0(), A1()});
    });
    c.emplace_back("limits/product-discontinuity", [](std::string&) {
        using namespace fx::discontinuity;
        const Matrix z = Matrix::zero(2, 2);
        EpsFamily fa = EpsFamily::make({A0(), z, A1()});
        EpsFamily fb = EpsFamily::make({B0(), B1()});
        PMSeq of_limits = mul(limit(fa), limit(fb));
        PMSeq limit_of_product = limit(fa * fb);
        return of_limits == ppi({A1() * B0(), A0() * B1()}) &&
               limit_of_product == ppi({A0() * B1(), A1() * B0()}) && !(of_limits == limit_of_product);
    });
    c.emplace_back("hinge/relation-projections", [](std::string&) {
        const Hinge h = expected_hinge();
        const LinearRelation& p2 = h[1];
        return p2.dom() == span_of(2, {1}) && p2.indef() == span_of(2, {0});
    });
    c.emplace_back("hinge/is-hinge", [](std::string&) { return is_hinge(expected_hinge().relations()); });
    c.emplace_back("hinge/in-MH", [](std::string&) {
        using namespace fx::hinge_limit;
        return in_MH(pi(RawSeq::make({A0(), A2()})));
    });
    c.emplace_back("hinge/product-leaves-MH", [](std::string&) {
        using namespace fx::mh_not_closed;
        MSeq prod = pi(mul_raw(RawSeq::make({B0(), B1()}), RawSeq::make({A0(), A1()})));
        return total_image(prod) == span_of(2, {0}) && !in_MH(prod);
    });
    c.emplace_back("hinge/varphi", [](std::string&) {
        using namespace fx::hinge_limit;
        Hinge h = varphi(pi(RawSeq::make({A0(), A2()})));
        return h == expected_hinge() && h[0] == LinearRelation::graph(A0());
    });
    c.emplace_back("hinge/varphi-of-unit-is-graph", [](std::string&) {
        const Matrix g{{2, 1}, {1, 1}};
        return varphi(MSeq::single(g)) == Hinge::make({LinearRelation::graph(g)});
    });
    c.emplace_back("hinge/surjectivity", [](std::string&) {
        Hinge h = expected_hinge();
        return hinge_equiv(varphi(hinge_to_MH(h)), h);
    });
    c.emplace_back("exterior/wedge3-of-limit", [](std::string&) {
        using namespace fx::wedge4;
        WedgeMap w = wedge_seq(pi(RawSeq::make({A0(), A1()})), 3);
        const std::vector<Scalar> diag{1, 1, 0, 0};
        return w.k == 3 && w.matrix == Matrix::diagonal(diag);
    });
    c.emplace_back("exterior/det-in-MH", [](std::string&) {
        using namespace fx::hinge_limit;
        return !det_seq(pi(RawSeq::make({A0(), A2()}))).is_zero();
    });
    c.emplace_back("exterior/det-outside-MH", [](std::string&) {
        using namespace fx::hinge_limit;
        return det_seq(pi(RawSeq::make({A0(), A1()}))).is_zero();
    });
    c.emplace_back("exterior/lambda-not-multiplicative", [](std::string&) {
        using namespace fx::mh_not_closed;
        MSeq a = pi(RawSeq::make({A0(), A1()}));
        MSeq b = pi(RawSeq::make({B0(), B1()}));
        return !(lambda(mul(b, a)) == compose(lambda(b), lambda(a)));
    });
    c.emplace_back("exterior/lambda-bar-of-limit", [](std::string&) {
        using namespace fx::wedge4;
        LambdaVector l = lambda_bar(limit(EpsFamily::make({A0(), A1()})));
        const std::vector<Scalar> diag{1, 1, 0, 0};
        return l.components.size() == 3 && l.components[2].matrix == Matrix::diagonal(diag);
    });
    c.emplace_back("cli/normalize-chain-dims", [](std::string&) {
        using namespace fx::order_dependence;
        io::json doc = io::to_json(RawSeq::make({A(), B()}));
        io::json out = io::to_json(io::sequence_from_json(doc));
        return out.at("chain_dims") == io::json::array({2, 1, 0});
    });
    return c;
}

}  // namespace

std::vector<ExampleResult> verify_examples(std::uint64_t seed) {
    std::vector<ExampleResult> results;
    for (auto& [name, check] : catalogue(seed)) {
        ExampleResult r{name, false, {}};
        try {
            r.passed = check(r.detail);
            if (!r.passed && r.detail.empty()) r.detail = "result differs from the expected value";
        } catch (const std::exception& ex) {
            r.detail = ex.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::size_t example_count() { return catalogue(0).size(); }

}  // namespace pmonoid::cli

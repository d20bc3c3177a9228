#include "anbn/witness.hpp"

namespace anbn {

WitnessQuery::WitnessQuery(Int a_, Int b_, Int m_, Int r_)
    : a(std::move(a_)), b(std::move(b_)), m(std::move(m_)), target_residue(std::move(r_)) {
    if (m < 1) throw arith_error("witness query: modulus must be positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw arith_error("witness query: gcd(b, m) must be 1");
}

std::pair<Int, std::vector<TraceFrame>> witness_coprime(const Int& a, const Int& b,
                                                        const Int& m, const Int& r) {
    if (m < 1) throw arith_error("witness_coprime: modulus must be positive");
    Int g;
    Int ab = a * b;
    mpz_gcd(g.get_mpz_t(), ab.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw arith_error("witness_coprime: gcd(a*b, m) must be 1");

    if (m == 1) return {Int(1), {}};

    auto fac = factorize(m);
    const Int& p = fac.factors.back().first;  // largest prime, peeled one power per level
    Int m0 = m / p;
    auto [k, frames] = witness_coprime(a, b, m0, r);

    Int prod = 1;
    for (const auto& [pi, ei] : fac.factors) prod *= pi - 1;

    // a^k + b*k = r + m0*q0 for some q0; only q0 mod p enters the lift, and
    // t = (a^k + b*k - r) mod m equals m0*(q0 mod p).
    Int t = mod_reduce(pow_mod(a, k, m) + b * k - r, m);
    if (!mpz_divisible_p(t.get_mpz_t(), m0.get_mpz_t()))
        throw arith_error("witness_coprime: internal divisibility failure");
    Int q0 = (t / m0) % p;
    Int q = mod_reduce(-q0 * mod_inverse(mod_reduce(b * prod, p), p), p);

    Int n = k + m0 * q * prod;
    frames.push_back(TraceFrame{m, p, m0, k, q});
    return {n, std::move(frames)};
}

namespace {

struct InnerQuery {
    Int A, B, R;  // coefficients and target of the coprime subproblem mod v
};

// Transformation from proof part (ii): with m = u*v and b*s = r (mod u),
// the coprime subproblem is (a^u)^k + (a*^s b u) k = a*^s (r - b s) (mod v).
InnerQuery transformed_query(const Int& a, const Int& b, const Int& r, const Int& u,
                             const Int& v, const Int& s) {
    if (v == 1) return {0, 0, 0};
    Int astar_s = pow_mod(mod_inverse(a, v), s, v);
    InnerQuery iq;
    iq.A = pow_mod(a, u, v);
    iq.B = mod_reduce(astar_s * b * u, v);
    iq.R = mod_reduce(astar_s * (r - b * s), v);
    return iq;
}

}  // namespace

WitnessCertificate witness(const WitnessQuery& query) {
    const Int &a = query.a, &b = query.b, &m = query.m, &r = query.target_residue;

    // u = product of maximal prime powers p^e || m with p | a (covers a = 0,
    // where every prime divides a, giving u = m).
    Int u = 1;
    for (const auto& [p, e] : factorize(m).factors) {
        if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            u *= pe;
        }
    }
    Int v = m / u;
    Int s = u == 1 ? Int(0) : mod_reduce(r * mod_inverse(b, u), u);

    Int k = 1;
    std::vector<TraceFrame> frames;
    if (v > 1) {
        InnerQuery iq = transformed_query(a, b, r, u, v, s);
        std::tie(k, frames) = witness_coprime(iq.A, iq.B, v, iq.R);
    }
    Int n = u * k + s;

    if (n < 1 || n > m * m || mod_reduce(pow_mod(a, n, m) + b * n - r, m) != 0)
        throw arith_error("witness: construction failed to meet its contract");
    return WitnessCertificate{query, n, u, v, s, std::move(frames)};
}

VerifyResult verify_certificate(const WitnessCertificate& cert) {
    const Int &a = cert.query.a, &b = cert.query.b, &m = cert.query.m,
              &r = cert.query.target_residue;
    auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };

    if (m < 1) return fail("modulus not positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    if (g != 1) return fail("gcd(b, m) != 1");
    if (cert.n < 1 || cert.n > m * m) return fail("n outside [1, m^2]");
    if (mod_reduce(pow_mod(a, cert.n, m) + b * cert.n - r, m) != 0)
        return fail("a^n + b*n != r (mod m)");

    if (cert.u < 1 || cert.v < 1 || cert.u * cert.v != m) return fail("u*v != m");
    if (cert.s < 0 || cert.s >= cert.u) return fail("s outside [0, u)");
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), cert.v.get_mpz_t());
    if (g != 1) return fail("gcd(a, v) != 1");
    if (cert.u > 1)
        for (const auto& [p, e] : factorize(cert.u).factors)
            if (!mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()))
                return fail("a prime of u does not divide a");

    // Replay the coprime trace from the base case up; recompute every lift
    // multiplier rather than trusting the stored ones.
    InnerQuery iq = transformed_query(a, b, r, cert.u, cert.v, cert.s);
    Int k = 1;
    Int cur_m = 1;
    for (const TraceFrame& f : cert.frames) {
        if (f.reduced_modulus != cur_m) return fail("trace levels do not chain");
        if (f.m_level != f.reduced_modulus * f.largest_prime)
            return fail("frame modulus is not m0 * p");
        auto fac = factorize(f.m_level);
        if (fac.factors.back().first != f.largest_prime)
            return fail("frame prime is not the largest prime of its level");
        if (f.k != k) return fail("frame k does not match inherited witness");

        Int prod = 1;
        for (const auto& [pi, ei] : fac.factors) prod *= pi - 1;
        Int t = mod_reduce(pow_mod(iq.A, f.k, f.m_level) + iq.B * f.k - iq.R, f.m_level);
        if (!mpz_divisible_p(t.get_mpz_t(), f.reduced_modulus.get_mpz_t()))
            return fail("inherited witness fails at the reduced modulus");
        Int q0 = (t / f.reduced_modulus) % f.largest_prime;
        Int q = mod_reduce(-q0 * mod_inverse(mod_reduce(iq.B * prod, f.largest_prime),
                                             f.largest_prime),
                           f.largest_prime);
        if (q != f.q) return fail("frame lift multiplier does not replay");

        k = f.k + f.reduced_modulus * q * prod;
        if (mod_reduce(pow_mod(iq.A, k, f.m_level) + iq.B * k - iq.R, f.m_level) != 0)
            return fail("lifted witness fails its level congruence");
        cur_m = f.m_level;
    }
    if (cur_m != cert.v && !(cert.v == 1 && cert.frames.empty()))
        return fail("trace does not reach modulus v");
    if (cert.u * k + cert.s != cert.n) return fail("trace does not reproduce n");
    return VerifyResult{true, ""};
}

std::optional<Int> brute_witness(const Int& a, const Int& b, const Int& m, const Int& r,
                                 const Int& cap) {
    if (m < 1 || cap < 1) throw arith_error("brute_witness: m and cap must be positive");
    Int ar = mod_reduce(a, m);
    Int br = mod_reduce(b, m);
    Int rr = mod_reduce(r, m);
    Int pw = ar;       // a^n mod m
    Int lin = 0;       // b*n mod m
    for (Int n = 1; n <= cap; ++n) {
        lin += br;
        if (lin >= m) lin -= m;
        if ((pw + lin) % m == rr) return n;
        pw = pw * ar % m;
    }
    return std::nullopt;
}

CoverageReport coverage_index(const SequenceSpec& spec, const Int& m, std::uint64_t cap) {
    if (m < 1) throw arith_error("coverage_index: modulus must be positive");
    if (m > 100'000'000) throw capacity_error("coverage modulus too large");
    std::uint64_t mm = mpz_get_ui(m.get_mpz_t());
    if (cap < mm) throw arith_error("coverage_index: cap must be >= m");

    CoverageReport rep;
    rep.spec = spec;
    rep.m = m;
    rep.cap = cap;

    std::vector<char> seen(mm, 0);
    std::uint64_t hit = 0;

    // incremental state
    Int pw = spec.kind == SeqKind::ExpLinear ? mod_reduce(spec.a, m) : Int(0);
    bool binom_kind = spec.kind == SeqKind::CentralBinomPlusN ||
                      spec.kind == SeqKind::CentralBinomMinusN ||
                      spec.kind == SeqKind::CatalanPlusN || spec.kind == SeqKind::CatalanMinusN;
    Int binom = 2;  // binom(2n, n), starting at n = 1

    for (std::uint64_t n = 1; n <= cap; ++n) {
        Int term;
        Int nn(static_cast<unsigned long>(n));
        switch (spec.kind) {
            case SeqKind::ExpLinear:
                term = pw + spec.b * nn;
                break;
            case SeqKind::PrimeMinusN:
                term = Int(static_cast<unsigned long>(nth_prime(n))) - nn;
                break;
            case SeqKind::NTimesPrime:
                term = nn * Int(static_cast<unsigned long>(nth_prime(n)));
                break;
            case SeqKind::CentralBinomPlusN:
                term = binom + nn;
                break;
            case SeqKind::CentralBinomMinusN:
                term = binom - nn;
                break;
            case SeqKind::CatalanPlusN:
            case SeqKind::CatalanMinusN: {
                Int cat, d(static_cast<unsigned long>(n + 1));
                mpz_divexact(cat.get_mpz_t(), binom.get_mpz_t(), d.get_mpz_t());
                term = spec.kind == SeqKind::CatalanPlusN ? Int(cat + nn) : Int(cat - nn);
                break;
            }
        }
        std::uint64_t res = mpz_get_ui(mod_reduce(term, m).get_mpz_t());
        if (!seen[res]) {
            seen[res] = 1;
            if (++hit == mm) {
                rep.covered = true;
                rep.first_cover_index = n;
                return rep;
            }
        }
        if (spec.kind == SeqKind::ExpLinear) {
            pw = pw * spec.a % m;
            if (pw < 0) pw += m;
        } else if (binom_kind) {
            // binom(2(n+1), n+1) = binom(2n, n) * 2(2n+1) / (n+1)
            binom *= 2 * Int(static_cast<unsigned long>(2 * n + 1));
            Int d(static_cast<unsigned long>(n + 1));
            mpz_divexact(binom.get_mpz_t(), binom.get_mpz_t(), d.get_mpz_t());
        }
    }
    for (std::uint64_t rvalue = 0; rvalue < mm; ++rvalue)
        if (!seen[rvalue]) rep.residues_missing.emplace_back(static_cast<unsigned long>(rvalue));
    return rep;
}

}  // namespace anbn

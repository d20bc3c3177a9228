#include "anbn/sequences.hpp"

#include <cmath>
#include <mutex>

namespace anbn {

SequenceSpec SequenceSpec::exp_linear(Int a, Int b) {
    SequenceSpec s;
    s.kind = SeqKind::ExpLinear;
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
}

SequenceSpec SequenceSpec::of(SeqKind kind) {
    SequenceSpec s;
    s.kind = kind;
    return s;
}

std::string SequenceSpec::name() const {
    switch (kind) {
        case SeqKind::ExpLinear:
            return "explinear(" + a.get_str() + "," + b.get_str() + ")";
        case SeqKind::PrimeMinusN: return "prime-minus-n";
        case SeqKind::NTimesPrime: return "n-times-prime";
        case SeqKind::CentralBinomPlusN: return "central-binomial-plus-n";
        case SeqKind::CentralBinomMinusN: return "central-binomial-minus-n";
        case SeqKind::CatalanPlusN: return "catalan-plus-n";
        case SeqKind::CatalanMinusN: return "catalan-minus-n";
    }
    return "?";
}

Int central_binomial(std::uint64_t n) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r;
}

Int catalan(std::uint64_t n) {
    Int b = central_binomial(n);
    Int r;
    Int d(static_cast<unsigned long>(n + 1));
    mpz_divexact(r.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    return r;
}

Int seq_term(const SequenceSpec& spec, std::uint64_t n) {
    if (n < 1) throw arith_error("seq_term: index is 1-based");
    switch (spec.kind) {
        case SeqKind::ExpLinear: {
            if (n > 2'000'000) throw capacity_error("explinear exact term too large");
            Int p;
            mpz_pow_ui(p.get_mpz_t(), spec.a.get_mpz_t(), n);
            return p + spec.b * Int(static_cast<unsigned long>(n));
        }
        case SeqKind::PrimeMinusN:
            return Int(static_cast<unsigned long>(nth_prime(n))) - Int(static_cast<unsigned long>(n));
        case SeqKind::NTimesPrime:
            return Int(static_cast<unsigned long>(n)) * Int(static_cast<unsigned long>(nth_prime(n)));
        case SeqKind::CentralBinomPlusN: return central_binomial(n) + Int(static_cast<unsigned long>(n));
        case SeqKind::CentralBinomMinusN: return central_binomial(n) - Int(static_cast<unsigned long>(n));
        case SeqKind::CatalanPlusN: return catalan(n) + Int(static_cast<unsigned long>(n));
        case SeqKind::CatalanMinusN: return catalan(n) - Int(static_cast<unsigned long>(n));
    }
    throw arith_error("seq_term: unknown kind");
}

Int seq_term_mod(const SequenceSpec& spec, std::uint64_t n, const Int& m) {
    if (spec.kind == SeqKind::ExpLinear) {
        Int t = pow_mod(spec.a, Int(static_cast<unsigned long>(n)), m) +
                spec.b * Int(static_cast<unsigned long>(n));
        return mod_reduce(t, m);
    }
    return mod_reduce(seq_term(spec, n), m);
}

namespace {

// p(n) by Euler's pentagonal-number recurrence.
std::vector<Int> build_unrestricted(std::size_t n_max) {
    std::vector<Int> p(n_max + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Int acc = 0;
        for (std::size_t k = 1;; ++k) {
            std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            bool plus = (k & 1) != 0;
            if (plus)
                acc += p[n - g1];
            else
                acc -= p[n - g1];
            std::size_t g2 = k * (3 * k + 1) / 2;
            if (g2 <= n) {
                if (plus)
                    acc += p[n - g2];
                else
                    acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p;
}

// q(n) by the distinct-parts 0/1 dynamic program over (1 + x^k) factors.
std::vector<Int> build_strict(std::size_t n_max) {
    std::vector<Int> q(n_max + 1);
    q[0] = 1;
    for (std::size_t part = 1; part <= n_max; ++part)
        for (std::size_t s = n_max; s >= part; --s) q[s] += q[s - part];
    return q;
}

}  // namespace

PartitionTable::PartitionTable(PartitionKind kind, std::size_t n_max) : kind_(kind) {
    if (n_max > 500'000) throw capacity_error("partition table capacity exceeded");
    values_ = kind == PartitionKind::unrestricted ? build_unrestricted(n_max)
                                                  : build_strict(n_max);
}

const Int& PartitionTable::at(std::size_t n) const {
    if (n >= values_.size()) throw capacity_error("partition table capacity exceeded");
    return values_[n];
}

std::vector<std::uint64_t> partition_residues(PartitionKind kind, std::size_t n_max,
                                              std::uint64_t m) {
    if (m == 0) throw arith_error("partition_residues: modulus must be positive");
    if (n_max > 5'000'000) throw capacity_error("partition residue table capacity exceeded");
    std::vector<std::uint64_t> t(n_max + 1, 0);
    t[0] = 1 % m;
    if (kind == PartitionKind::strict) {
        for (std::size_t part = 1; part <= n_max; ++part)
            for (std::size_t s = n_max; s >= part; --s) t[s] = (t[s] + t[s - part]) % m;
    } else {
        for (std::size_t n = 1; n <= n_max; ++n) {
            std::uint64_t acc = 0;
            for (std::size_t k = 1;; ++k) {
                std::size_t g1 = k * (3 * k - 1) / 2;
                if (g1 > n) break;
                bool plus = (k & 1) != 0;
                acc = plus ? (acc + t[n - g1]) % m : (acc + m - t[n - g1]) % m;
                std::size_t g2 = k * (3 * k + 1) / 2;
                if (g2 <= n) acc = plus ? (acc + t[n - g2]) % m : (acc + m - t[n - g2]) % m;
            }
            t[n] = acc;
        }
    }
    return t;
}

namespace {

class SequenceCaches {
  public:
    static SequenceCaches& instance() {
        static SequenceCaches c;
        return c;
    }

    Int partition(PartitionKind kind, std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& slot = kind == PartitionKind::unrestricted ? p_ : q_;
        if (!slot || slot->capacity() < n) {
            std::size_t target = std::max<std::size_t>(n, 1024);
            if (slot) target = std::max(target, slot->capacity() * 2);
            target = std::min<std::size_t>(target, 500'000);
            if (target < n) throw capacity_error("partition table capacity exceeded");
            slot = std::make_unique<PartitionTable>(kind, target);
        }
        return slot->at(n);
    }

    Int bell(std::size_t n) {
        if (n == 0) return 1;  // the empty set has one partition
        if (n > 5000) throw capacity_error("bell table capacity exceeded");
        std::lock_guard<std::mutex> lock(mu_);
        // Bell triangle, keeping only the previous row; bells_[k-1] = B(k)
        while (bells_.size() < n) {
            std::vector<Int> next;
            next.reserve(row_.size() + 1);
            next.push_back(row_.empty() ? Int(1) : row_.back());
            for (const Int& x : row_) next.push_back(next.back() + x);
            row_ = std::move(next);
            bells_.push_back(row_.back());
        }
        return bells_[n - 1];
    }

  private:
    std::mutex mu_;
    std::unique_ptr<PartitionTable> p_, q_;
    std::vector<Int> row_;
    std::vector<Int> bells_;
};

}  // namespace

Int partition_p(std::size_t n) {
    return SequenceCaches::instance().partition(PartitionKind::unrestricted, n);
}

Int strict_partition_q(std::size_t n) {
    return SequenceCaches::instance().partition(PartitionKind::strict, n);
}

Int bell(std::size_t n) { return SequenceCaches::instance().bell(n); }

double hardy_ramanujan_estimate(std::uint64_t n, PartitionKind kind) {
    if (n < 1) throw arith_error("hardy_ramanujan_estimate: n must be positive");
    const double pi = 3.14159265358979323846;
    double dn = static_cast<double>(n);
    if (kind == PartitionKind::unrestricted)
        return std::exp(pi * std::sqrt(2.0 * dn / 3.0)) / (4.0 * std::sqrt(3.0) * dn);
    return std::exp(pi * std::sqrt(dn / 3.0)) / (4.0 * std::pow(3.0 * dn * dn * dn, 0.25));
}

}  // namespace anbn

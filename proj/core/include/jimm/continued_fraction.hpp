#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jimm/rational.hpp"

namespace jimm {

// Pull generator of partial quotients. nullopt means the expansion genuinely
// terminates (the value is rational); budget problems are thrown.
class TermSource {
  public:
    virtual ~TermSource() = default;
    virtual std::optional<Int> next() = 0;
};

// A continued fraction [n0; n1, n2, ...] with n0 >= 0, n_i >= 1, optionally
// S-prefixed: the value is then -1/[n0; n1, ...]. Finite expansions follow the
// uniqueness convention (last term >= 2 unless the expansion is just [n0]).
// Periodic expansions store a minimal preperiod and a primitive period.
// Stream expansions extend on demand; a Stream is single-consumer.
class ContinuedFraction {
  public:
    enum class Kind { Finite, Periodic, Stream };

    static ContinuedFraction finite(bool s_prefix, std::vector<Int> terms);
    static ContinuedFraction periodic(bool s_prefix, std::vector<Int> pre, std::vector<Int> per);
    static ContinuedFraction stream(bool s_prefix, std::shared_ptr<TermSource> src);

    Kind kind() const { return kind_; }
    bool s_prefix() const { return s_prefix_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_periodic() const { return kind_ == Kind::Periodic; }
    bool is_stream() const { return kind_ == Kind::Stream; }

    // i-th partial quotient, pulling the generator as needed.
    std::optional<Int> term(size_t i) const;

    const std::vector<Int>& finite_terms() const;
    const std::vector<Int>& preperiod() const;
    const std::vector<Int>& period() const;

    // Number of terms obtainable without consulting the generator;
    // SIZE_MAX for Periodic.
    size_t materialized() const;

    // Structural equality of canonical Finite/Periodic forms (equivalent to
    // value equality). Streams compare by identity.
    bool operator==(const ContinuedFraction& o) const;
    bool operator!=(const ContinuedFraction& o) const { return !(*this == o); }

    std::string str(size_t max_terms = 24) const;

  private:
    struct StreamState {
        std::shared_ptr<TermSource> source;
        std::vector<Int> cache;
        bool ended = false;
    };

    ContinuedFraction() = default;

    Kind kind_ = Kind::Finite;
    bool s_prefix_ = false;
    std::vector<Int> pre_;  // Finite: all terms; Periodic: preperiod
    std::vector<Int> per_;  // Periodic: primitive period
    std::shared_ptr<StreamState> stream_;
};

// kappa^{-1} on rational ends: Euclidean expansion, negatives via the S prefix.
ContinuedFraction cf_of_rational(const Rational& x);

// Exact value of a Finite expansion (or an ended Stream's materialized terms).
Rational value_of_finite_cf(const ContinuedFraction& cf);

// First k convergents p_i/q_i of the term sequence (the S prefix is not
// applied). Throws InsufficientTerms when fewer than k terms exist.
std::vector<Rational> convergents(const ContinuedFraction& cf, size_t k);

// Longest common prefix length of two term sequences, capped at budget.
size_t common_prefix_terms(const ContinuedFraction& a, const ContinuedFraction& b, size_t budget);

}  // namespace jimm

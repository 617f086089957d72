#include "jimm/continued_fraction.hpp"

#include <cassert>
#include <sstream>

#include "jimm/error.hpp"

namespace jimm {

namespace {

void validate_terms(const std::vector<Int>& terms, size_t start_index) {
    for (size_t i = 0; i < terms.size(); ++i) {
        size_t pos = start_index + i;
        if (pos == 0) {
            if (terms[i] < 0) throw Error("ContinuedFraction: n0 must be >= 0");
        } else if (terms[i] < 1) {
            throw Error("ContinuedFraction: terms after n0 must be >= 1");
        }
    }
}

}  // namespace

ContinuedFraction ContinuedFraction::finite(bool s_prefix, std::vector<Int> terms) {
    validate_terms(terms, 0);
    // uniqueness: [..., m, 1] == [..., m+1]
    if (terms.size() >= 2 && terms.back() == 1) {
        terms.pop_back();
        terms.back() += 1;
    }
    ContinuedFraction cf;
    cf.kind_ = Kind::Finite;
    cf.s_prefix_ = s_prefix;
    cf.pre_ = std::move(terms);
    return cf;
}

ContinuedFraction ContinuedFraction::periodic(bool s_prefix, std::vector<Int> pre,
                                              std::vector<Int> per) {
    if (per.empty()) throw Error("ContinuedFraction: empty period");
    validate_terms(pre, 0);
    for (const Int& t : per)
        if (t < 1) throw Error("ContinuedFraction: period terms must be >= 1");

    // primitive period
    for (size_t len = 1; len < per.size(); ++len) {
        if (per.size() % len != 0) continue;
        bool pow = true;
        for (size_t i = len; i < per.size() && pow; ++i) pow = per[i] == per[i % len];
        if (pow) {
            per.resize(len);
            break;
        }
    }
    // minimal preperiod: absorb matching tail into a rotation of the period
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
    ContinuedFraction cf;
    cf.kind_ = Kind::Periodic;
    cf.s_prefix_ = s_prefix;
    cf.pre_ = std::move(pre);
    cf.per_ = std::move(per);
    return cf;
}

ContinuedFraction ContinuedFraction::stream(bool s_prefix, std::shared_ptr<TermSource> src) {
    ContinuedFraction cf;
    cf.kind_ = Kind::Stream;
    cf.s_prefix_ = s_prefix;
    cf.stream_ = std::make_shared<StreamState>();
    cf.stream_->source = std::move(src);
    return cf;
}

std::optional<Int> ContinuedFraction::term(size_t i) const {
    switch (kind_) {
        case Kind::Finite:
            if (i < pre_.size()) return pre_[i];
            return std::nullopt;
        case Kind::Periodic:
            if (i < pre_.size()) return pre_[i];
            return per_[(i - pre_.size()) % per_.size()];
        case Kind::Stream: {
            StreamState& st = *stream_;
            while (st.cache.size() <= i && !st.ended) {
                auto t = st.source->next();
                if (!t) {
                    st.ended = true;
                    break;
                }
                st.cache.push_back(*t);
            }
            if (i < st.cache.size()) return st.cache[i];
            return std::nullopt;
        }
    }
    return std::nullopt;
}

const std::vector<Int>& ContinuedFraction::finite_terms() const {
    if (kind_ != Kind::Finite) throw Error("ContinuedFraction: not a finite expansion");
    return pre_;
}

const std::vector<Int>& ContinuedFraction::preperiod() const {
    if (kind_ != Kind::Periodic) throw Error("ContinuedFraction: not periodic");
    return pre_;
}

const std::vector<Int>& ContinuedFraction::period() const {
    if (kind_ != Kind::Periodic) throw Error("ContinuedFraction: not periodic");
    return per_;
}

size_t ContinuedFraction::materialized() const {
    switch (kind_) {
        case Kind::Finite: return pre_.size();
        case Kind::Periodic: return static_cast<size_t>(-1);
        case Kind::Stream: return stream_->cache.size();
    }
    return 0;
}

bool ContinuedFraction::operator==(const ContinuedFraction& o) const {
    if (kind_ == Kind::Stream || o.kind_ == Kind::Stream)
        return stream_ == o.stream_ && s_prefix_ == o.s_prefix_;
    return kind_ == o.kind_ && s_prefix_ == o.s_prefix_ && pre_ == o.pre_ && per_ == o.per_;
}

std::string ContinuedFraction::str(size_t max_terms) const {
    std::ostringstream os;
    if (s_prefix_) os << "S·";
    os << "[";
    switch (kind_) {
        case Kind::Finite:
            for (size_t i = 0; i < pre_.size(); ++i) os << (i ? "," : "") << pre_[i];
            break;
        case Kind::Periodic: {
            for (size_t i = 0; i < pre_.size(); ++i) os << (i ? "," : "") << pre_[i];
            os << (pre_.empty() ? "(" : ";(");
            for (size_t i = 0; i < per_.size(); ++i) os << (i ? "," : "") << per_[i];
            os << ")*";
            break;
        }
        case Kind::Stream: {
            size_t n = std::min(stream_->cache.size(), max_terms);
            for (size_t i = 0; i < n; ++i) os << (i ? "," : "") << stream_->cache[i];
            if (!stream_->ended) os << ",...";
            break;
        }
    }
    os << "]";
    return os.str();
}

ContinuedFraction cf_of_rational(const Rational& x) {
    if (x.is_infinity()) return ContinuedFraction::finite(false, {});
    if (x.sign() < 0) {
        Rational y = -x.reciprocal();  // -1/x > 0
        ContinuedFraction inner = cf_of_rational(y);
        return ContinuedFraction::finite(true, inner.finite_terms());
    }
    std::vector<Int> terms;
    Int n = x.num(), d = x.den();
    while (d != 0) {
        Int a = floor_div(n, d);
        terms.push_back(a);
        Int rem = n - a * d;
        n = d;
        d = rem;
    }
    return ContinuedFraction::finite(false, std::move(terms));
}

Rational value_of_finite_cf(const ContinuedFraction& cf) {
    std::vector<Int> terms;
    if (cf.is_finite()) {
        terms = cf.finite_terms();
    } else if (cf.is_stream()) {
        // force to the end
        for (size_t i = 0;; ++i) {
            auto t = cf.term(i);
            if (!t) break;
            terms.push_back(*t);
        }
    } else {
        throw Error("value_of_finite_cf: periodic expansion is irrational");
    }
    Rational v = Rational::infinity();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        v = Rational(*it) + v.reciprocal();
    if (cf.s_prefix()) v = -v.reciprocal();
    return v;
}

std::vector<Rational> convergents(const ContinuedFraction& cf, size_t k) {
    std::vector<Rational> out;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // p_{-2}/q_{-2}, p_{-1}/q_{-1}
    for (size_t i = 0; i < k; ++i) {
        auto t = cf.term(i);
        if (!t) throw InsufficientTerms("convergents: only " + std::to_string(i) +
                                        " terms available, " + std::to_string(k) + " requested");
        Int p = *t * p1 + p0, q = *t * q1 + q0;
        out.emplace_back(p, q);
        p0 = p1;
        q0 = q1;
        p1 = p;
        q1 = q;
    }
    return out;
}

size_t common_prefix_terms(const ContinuedFraction& a, const ContinuedFraction& b, size_t budget) {
    for (size_t i = 0; i < budget; ++i) {
        auto ta = a.term(i), tb = b.term(i);
        if (!ta || !tb || *ta != *tb) return i;
    }
    return budget;
}

}  // namespace jimm

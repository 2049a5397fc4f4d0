#pragma once

#include <cstdint>

#include "jetbracket/multi_index.hpp"

namespace jetbracket {

enum class CoordKind : std::uint8_t { Time, Base, Jet };

/// A coordinate on J^infty(pi) x R: the time t, a base variable x_i, or a jet
/// coordinate u^j_sigma (empty sigma is the fiber coordinate u^j itself).
/// Indices are 0-based internally; printing is 1-based.
class JetCoordinate {
public:
    static JetCoordinate time() { return JetCoordinate(CoordKind::Time, 0, MultiIndex()); }
    static JetCoordinate base(int dir) { return JetCoordinate(CoordKind::Base, dir, MultiIndex()); }
    static JetCoordinate jet(int dep, MultiIndex sigma) {
        return JetCoordinate(CoordKind::Jet, dep, std::move(sigma));
    }

    CoordKind kind() const { return kind_; }
    bool is_time() const { return kind_ == CoordKind::Time; }
    bool is_base() const { return kind_ == CoordKind::Base; }
    bool is_jet() const { return kind_ == CoordKind::Jet; }

    /// Base direction or dependent-variable index, depending on kind.
    int index() const { return index_; }
    const MultiIndex& sigma() const { return sigma_; }

    bool operator==(const JetCoordinate& o) const {
        return kind_ == o.kind_ && index_ == o.index_ && sigma_ == o.sigma_;
    }
    bool operator!=(const JetCoordinate& o) const { return !(*this == o); }
    bool operator<(const JetCoordinate& o) const { return cmp(*this, o) < 0; }

    /// Total order t < x_1 < ... < x_n < u^j_sigma, jets by (j, |sigma|, lex).
    friend int cmp(const JetCoordinate& a, const JetCoordinate& b);

private:
    JetCoordinate(CoordKind kind, int index, MultiIndex sigma)
        : kind_(kind), index_(index), sigma_(std::move(sigma)) {}

    CoordKind kind_;
    int index_;
    MultiIndex sigma_;
};

}  // namespace jetbracket

#include "jetbracket/jet_coordinate.hpp"

namespace jetbracket {

int cmp(const JetCoordinate& a, const JetCoordinate& b) {
    if (a.kind_ != b.kind_)
        return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
    switch (a.kind_) {
        case CoordKind::Time:
            return 0;
        case CoordKind::Base:
            return a.index_ == b.index_ ? 0 : (a.index_ < b.index_ ? -1 : 1);
        case CoordKind::Jet:
            if (a.index_ != b.index_) return a.index_ < b.index_ ? -1 : 1;
            return cmp_graded_lex(a.sigma_, b.sigma_);
    }
    return 0;
}

}  // namespace jetbracket

#pragma once

#include <stdexcept>
#include <string>

namespace ecc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / indexing
struct DisconnectedGraph : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DuplicateIndex : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// family constructors and closed forms
struct InvalidFamilyParameters : Error { using Error::Error; };
struct OrderTooSmall : Error { using Error::Error; };
struct DiameterTooSmall : Error { using Error::Error; };
struct NonIntegerResult : Error { using Error::Error; };
struct NoRootInBracket : Error { using Error::Error; };

// spectral
struct NoConvergence : Error { using Error::Error; };
struct RankOutOfRange : Error { using Error::Error; };

// partitions
struct InvalidPartition : Error { using Error::Error; };
struct NonIntegerQuotient : Error { using Error::Error; };
struct NotEquitable : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };

// enumeration
struct OrderCapExceeded : Error { using Error::Error; };

}  // namespace ecc

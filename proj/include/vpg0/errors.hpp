#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace vpg0 {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int lineNo, const std::string& what)
        : std::runtime_error("line " + std::to_string(lineNo) + ": " + what), line(lineNo) {}
};

struct CycleError : std::runtime_error {
    explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotTransitiveError : std::runtime_error {
    explicit NotTransitiveError(const std::string& what) : std::runtime_error(what) {}
};

struct DiamondRelatedC4Error : std::runtime_error {
    explicit DiamondRelatedC4Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotBipartiteError : std::runtime_error {
    explicit NotBipartiteError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAdjacentError : std::runtime_error {
    explicit NotAdjacentError(const std::string& what) : std::runtime_error(what) {}
};

// Four elements forming two disjoint 2-chains in the offending subposet.
struct TwoPlusTwoError : std::runtime_error {
    std::array<std::string, 4> witness;  // a < x, b < y with all cross pairs incomparable
    TwoPlusTwoError(const std::string& what, std::array<std::string, 4> w)
        : std::runtime_error(what), witness(w) {}
};

struct EmptyCliqueRegionError : std::runtime_error {
    explicit EmptyCliqueRegionError(const std::string& what) : std::runtime_error(what) {}
};

struct PinOrderMismatchError : std::runtime_error {
    explicit PinOrderMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPosetError : std::runtime_error {
    explicit InvalidPosetError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidSigmaError : std::runtime_error {
    explicit InvalidSigmaError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vpg0

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dockchain {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Protocol errors (chain-topology operations).
struct RootOccupied : Error {
    RootOccupied() : Error("RootOccupied: charge point already hosts an occupant") {}
};
struct NoEmptySocket : Error {
    explicit NoEmptySocket(const std::string& why)
        : Error("NoEmptySocket: " + why) {}
};
struct NoSuchAdapter : Error {
    explicit NoSuchAdapter(const std::string& id)
        : Error("NoSuchAdapter: " + id) {}
};
struct NoSuchEv : Error {
    explicit NoSuchEv(const std::string& id) : Error("NoSuchEv: " + id) {}
};
struct AuthFailure : Error {
    explicit AuthFailure(const std::string& id)
        : Error("AuthFailure: token mismatch for adapter " + id) {}
};
struct NotTerminal : Error {
    explicit NotTerminal(const std::string& id)
        : Error("NotTerminal: adapter " + id + " has a downstream adapter") {}
};
struct NotMid : Error {
    explicit NotMid(const std::string& id)
        : Error("NotMid: adapter " + id + " has no downstream adapter") {}
};

// Discovery / policy errors.
struct NoSamples : Error {
    explicit NoSamples(const std::string& what) : Error("NoSamples: " + what) {}
};
struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("TooLarge: " + what) {}
};
struct DegenerateChain : Error {
    DegenerateChain() : Error("DegenerateChain: both chain lengths are zero") {}
};
struct ZeroWeight : Error {
    explicit ZeroWeight(const std::string& what) : Error("ZeroWeight: " + what) {}
};

// Scenario errors.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& what)
        : Error("ValidationError: " + what) {}
};

}  // namespace dockchain

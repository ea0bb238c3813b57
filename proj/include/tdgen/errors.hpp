#pragma once

#include <stdexcept>

namespace tdgen {

// A generator or CLI parameter violates its documented range.
struct InvalidParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A congestion triple requests more conflicts than n*max_c/2 allows.
struct InfeasibleCongestion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File parser errors; the message carries origin and line number.
struct MalformedFile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solution and instance aircraft id sets differ.
struct IdMismatch : MalformedFile {
    using MalformedFile::MalformedFile;
};

// Header declares a format version this build does not read.
struct VersionMismatch : MalformedFile {
    using MalformedFile::MalformedFile;
};

// An operation was asked about an aircraft id not present in the instance.
struct UnknownId : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Process exit codes used by the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitInvalidParameter = 2,
    kExitInfeasible = 3,
    kExitMalformedFile = 4,
    kExitConflictsFound = 5,
};

}  // namespace tdgen

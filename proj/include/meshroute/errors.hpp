#pragma once

#include <stdexcept>
#include <string>

namespace meshroute {

// Precondition violations (bad node count, source == target, malformed
// parameters) are reported with std::invalid_argument. The types below cover
// the domain failures a caller is expected to handle.

// Terminal cannot be reached from the source.
class NoPathError : public std::runtime_error {
public:
    explicit NoPathError(const std::string& what) : std::runtime_error(what) {}
};

// A node sequence uses a link that has no cost entry.
class BrokenPathError : public std::runtime_error {
public:
    explicit BrokenPathError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario generation gave up before source and terminal were connected.
class ConnectivityError : public std::runtime_error {
public:
    explicit ConnectivityError(const std::string& what) : std::runtime_error(what) {}
};

// Reading or writing a file failed, or its contents are malformed.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meshroute

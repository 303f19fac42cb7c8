#pragma once

#include <stdexcept>
#include <string>

namespace talent {

// Error taxonomy used across the library. Every failure mode maps to one of
// these so callers (and the CLI) can distinguish bad shapes from bad inputs
// from bad files.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class IngestError : public std::runtime_error {
public:
    explicit IngestError(const std::string& msg) : std::runtime_error(msg) {}
};

class TrainingError : public std::runtime_error {
public:
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

class PersistenceError : public std::runtime_error {
public:
    explicit PersistenceError(const std::string& msg) : std::runtime_error(msg) {}
};

class MetricError : public std::runtime_error {
public:
    explicit MetricError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace talent

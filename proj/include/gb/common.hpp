#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gb {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Thrown when a requested table would exceed the configured memory budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a computation reaches a state that a proven theorem rules out.
// This always indicates a bug in this program, never a mathematical finding;
// it must surface, not be swallowed.
class InternalInconsistencyError : public std::logic_error {
public:
    explicit InternalInconsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

class EmptySystemError : public std::invalid_argument {
public:
    explicit EmptySystemError(const std::string& msg) : std::invalid_argument(msg) {}
};

class AuditNotApplicableError : public std::invalid_argument {
public:
    explicit AuditNotApplicableError(const std::string& msg) : std::invalid_argument(msg) {}
};

class CheckpointCorruptError : public std::runtime_error {
public:
    explicit CheckpointCorruptError(const std::string& msg) : std::runtime_error(msg) {}
};

class ResumeRefusedError : public std::runtime_error {
public:
    explicit ResumeRefusedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gb

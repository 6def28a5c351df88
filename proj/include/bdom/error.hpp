#pragma once

#include <stdexcept>
#include <string>

namespace bdom {

// Every failure the library raises deliberately carries one of these codes so
// callers (and tests) can branch on the cause instead of parsing messages.
enum class errc {
    invalid_argument,
    degree_exceeded,
    loop_edge,
    duplicate_edge,
    size_limit_exceeded,
    unknown_name,
    not_suppressible,
    overlapping_domains,
    not_dominating_after_normalize,
    single_attachment_unsupported,
    lift_failed,
    not_in_vstar,
    not_applicable,
    io_failure,
    timeout,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace bdom

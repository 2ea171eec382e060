#ifndef SNC_ERROR_HPP
#define SNC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace snc {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad vertex id, malformed order, ...).
class invalid_argument : public error {
   public:
    using error::error;
};

/// Construction of a digraph failed: loop, digon, duplicate arc or vertex out of range.
class invalid_digraph : public invalid_argument {
   public:
    using invalid_argument::invalid_argument;
};

/// The missing graph is not a disjoint union of stars.
class not_disjoint_stars : public error {
   public:
    using error::error;
};

/// The instance is larger than the exact median-order solver accepts.
class size_cap_exceeded : public error {
   public:
    using error::error;
};

/// A digraph that was required to be good is not.
class not_good : public error {
   public:
    using error::error;
};

/// No tournament with the requested property exists.
class unrealizable : public error {
   public:
    using error::error;
};

/// A structural assertion about a construction did not hold. These are
/// findings about the mathematics or the construction, never input errors.
class consistency_violation : public error {
   public:
    using error::error;
};

/// The digraph obtained by adding the path arcs was not good.
class goodness_violation : public consistency_violation {
   public:
    using consistency_violation::consistency_violation;
};

/// Text could not be parsed as an instance. `line` is 1-based, 0 if unknown.
class parse_error : public error {
   public:
    parse_error(std::size_t line, const std::string& what)
        : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace snc

#endif

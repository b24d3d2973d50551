#ifndef MAXLAYERS_ERRORS_HPP
#define MAXLAYERS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxlayers {

// Raised when a caller breaks an operation's precondition (dimension
// mismatch, inserting a comparable point into a layer, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Raised while ingesting user-provided data. line() is 1-based, 0 when the
// error is not tied to a particular line.
class InputError : public std::runtime_error {
public:
    InputError(std::string const& what, std::size_t line = 0)
        : std::runtime_error(what), line_(line) {}

    [[nodiscard]] auto line() const noexcept -> std::size_t { return line_; }

private:
    std::size_t line_;
};

#ifdef NDEBUG
inline constexpr bool kContractChecksDefault = false;
#else
inline constexpr bool kContractChecksDefault = true;
#endif

} // namespace maxlayers

#endif

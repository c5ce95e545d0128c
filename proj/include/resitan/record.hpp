#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "resitan/errors.hpp"

namespace resitan {

enum class Check {
    gi,
    gi_plus,
    thm_main_exact,
    thm_main_numeric,
    lemma21,
    lemma31,
    criterion,
    cor11,
    cor12,
    pmd_lemma,
    pmd_thm14,
};

inline constexpr std::array<Check, 11> kAllChecks = {
    Check::gi,      Check::gi_plus,   Check::thm_main_exact, Check::thm_main_numeric,
    Check::lemma21, Check::lemma31,   Check::criterion,      Check::cor11,
    Check::cor12,   Check::pmd_lemma, Check::pmd_thm14,
};

std::string_view check_name(Check c) noexcept;
std::optional<Check> parse_check(std::string_view name) noexcept;

enum class Status { pass, fail, skipped, error };

/// One outcome of one check on one (p, m, a) triple. Exact checks pass iff
/// `expected` and `actual` render identically; numeric checks carry their
/// tolerance inside `expected`.
struct VerificationRecord {
    std::uint64_t p = 0;
    std::uint32_t m = 0;
    std::int64_t a = 0;
    Check check = Check::gi;
    Status status = Status::pass;
    std::string error_text;  // only for Status::error
    std::string expected;
    std::string actual;
    double elapsed_ms = 0.0;

    bool ok() const noexcept { return status == Status::pass || status == Status::skipped; }

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

/// "pass", "fail", "skipped(hypothesis)" or "error(<text>)".
std::string status_string(const VerificationRecord& r);

/// Inverse of status_string; fills status and error_text. Returns false on
/// an unrecognized string.
bool parse_status(std::string_view s, VerificationRecord& r);

/// Runs `body` and stamps the wall time it took into the returned record.
template <class Body>
VerificationRecord timed(Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord rec = body();
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

/// Runs `body` (which returns a fully populated record) and converts thrown
/// errors into skipped or error records for (p, m, a, check).
template <class Body>
VerificationRecord guarded(std::uint64_t p, std::uint32_t m, std::int64_t a, Check check, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationRecord rec;
    try {
        rec = body();
    } catch (const HypothesisError& e) {
        rec = VerificationRecord{};
        rec.status = Status::skipped;
        rec.actual = e.what();
    } catch (const std::exception& e) {
        rec = VerificationRecord{};
        rec.status = Status::error;
        rec.error_text = e.what();
    }
    rec.p = p;
    rec.m = m;
    rec.a = a;
    rec.check = check;
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

}  // namespace resitan

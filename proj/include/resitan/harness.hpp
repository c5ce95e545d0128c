#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "resitan/arith.hpp"
#include "resitan/record.hpp"

namespace resitan {

/// Numeric cross-checks inside the corollary checks run only up to this p.
inline constexpr std::uint64_t kCorollaryNumericLimit = 2000;

/// p = x^2 + 27 y^2: the tangent product over R_3(p) equals
/// (-1)^{xy/2} (-2)^{(p-1)/6}. Throws NotRepresentableError otherwise.
VerificationRecord verify_cor11(const PrimeContext& ctx, std::int64_t a);

/// p = x^2 + 64 y^2: the tangent product over R_4(p) equals
/// (-1)^y (-2)^{(p-1)/8}, and (-2)^{(p-1)/8} = (-1)^y mod p.
VerificationRecord verify_cor12(const PrimeContext& ctx, std::int64_t a);

/// Only the congruence (-2)^{(p-1)/8} = (-1)^y (mod p) for p = x^2 + 64 y^2.
/// Returns nullopt when p is not representable.
std::optional<bool> cor12_congruence(const PrimeContext& ctx);

struct ScanConfig {
    std::uint64_t p_min = 3;
    std::uint64_t p_max = 100;
    /// nullopt: every m with 2m | p - 1.
    std::optional<std::vector<std::uint32_t>> m_list;
    /// a in {1..a_count} plus p - 1; a_all selects every a in [1, p - 1].
    std::uint32_t a_count = 5;
    bool a_all = false;
    std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
    double tolerance = 1e-6;
    /// Keep measured elapsed_ms; otherwise it is zeroed so reports are
    /// byte-reproducible.
    bool record_timing = false;
    /// 0: RESITAN_THREADS or hardware concurrency.
    unsigned threads = 0;
};

/// Throws InvalidInputError for p_min < 3 or a_count < 1.
void validate(const ScanConfig& cfg);

/// The a values for prime p under the config's policy, sorted and unique.
std::vector<std::int64_t> a_values(const ScanConfig& cfg, std::uint64_t p);

/// Runs every selected check over the primes in [p_min, p_max]. Output is
/// sorted by (p, m, a, check) independently of thread scheduling.
std::vector<VerificationRecord> scan(const ScanConfig& cfg);

/// Threads to use when the caller does not say: RESITAN_THREADS if set,
/// else hardware concurrency.
unsigned default_thread_count();

enum class ReportFormat { jsonl, csv };

std::optional<ReportFormat> parse_format(std::string_view s) noexcept;

void write_report(const std::vector<VerificationRecord>& records, ReportFormat format, std::ostream& out);
std::vector<VerificationRecord> read_report(std::istream& in, ReportFormat format);

/// Writes to `path`; throws std::runtime_error on I/O failure.
void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, const std::string& path);
std::vector<VerificationRecord> load_report(const std::string& path, ReportFormat format);

/// Single JSON object line for one record (no trailing newline).
std::string to_json_line(const VerificationRecord& r);

/// True iff no record failed or errored.
bool all_ok(const std::vector<VerificationRecord>& records);

}  // namespace resitan

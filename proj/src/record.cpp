#include "resitan/record.hpp"

namespace resitan {

std::string_view check_name(Check c) noexcept {
    switch (c) {
        case Check::gi: return "gi";
        case Check::gi_plus: return "gi_plus";
        case Check::thm_main_exact: return "thm_main_exact";
        case Check::thm_main_numeric: return "thm_main_numeric";
        case Check::lemma21: return "lemma21";
        case Check::lemma31: return "lemma31";
        case Check::criterion: return "criterion";
        case Check::cor11: return "cor11";
        case Check::cor12: return "cor12";
        case Check::pmd_lemma: return "pmd_lemma";
        case Check::pmd_thm14: return "pmd_thm14";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view name) noexcept {
    for (Check c : kAllChecks) {
        if (check_name(c) == name) return c;
    }
    return std::nullopt;
}

std::string status_string(const VerificationRecord& r) {
    switch (r.status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped(hypothesis)";
        case Status::error: return "error(" + r.error_text + ")";
    }
    return "?";
}

bool parse_status(std::string_view s, VerificationRecord& r) {
    r.error_text.clear();
    if (s == "pass") {
        r.status = Status::pass;
    } else if (s == "fail") {
        r.status = Status::fail;
    } else if (s == "skipped(hypothesis)") {
        r.status = Status::skipped;
    } else if (s.starts_with("error(") && s.ends_with(")")) {
        r.status = Status::error;
        r.error_text = std::string(s.substr(6, s.size() - 7));
    } else {
        return false;
    }
    return true;
}

}  // namespace resitan

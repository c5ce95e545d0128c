#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "gtest/gtest.h"
#include "resitan/errors.hpp"
#include "resitan/harness.hpp"

namespace resitan {
namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("resitan_test_" + name);
}

std::uint64_t order_of_two(std::uint64_t p) {
    std::uint64_t v = 2 % p, k = 1;
    while (v != 1) {
        v = v * 2 % p;
        ++k;
    }
    return k;
}

TEST(Cor11Test, Examples) {
    const auto r31 = verify_cor11(PrimeContext(31), 1);
    EXPECT_EQ(r31.status, Status::pass);
    EXPECT_EQ(r31.expected, "32");
    const auto r43 = verify_cor11(PrimeContext(43), 1);
    EXPECT_EQ(r43.status, Status::pass);
    EXPECT_EQ(r43.expected, "-128");
    EXPECT_THROW(verify_cor11(PrimeContext(31), 31), InvalidInputError);
    EXPECT_THROW(verify_cor11(PrimeContext(37), 1), NotRepresentableError);
    const auto guarded_rec = guarded(31, 3, 31, Check::cor11, [] { return verify_cor11(PrimeContext(31), 31); });
    EXPECT_EQ(guarded_rec.status, Status::error);
    EXPECT_EQ(status_string(guarded_rec).rfind("error(", 0), 0u);
}

TEST(Cor12Test, Examples) {
    const auto r113 = verify_cor12(PrimeContext(113), 1);
    EXPECT_EQ(r113.status, Status::pass);
    EXPECT_EQ(r113.expected, "-16384");
    const auto r337 = verify_cor12(PrimeContext(337), 1);
    EXPECT_EQ(r337.status, Status::pass);
    EXPECT_EQ(r337.expected, "4398046511104");  // 2^42
    EXPECT_THROW(verify_cor12(PrimeContext(17), 1), NotRepresentableError);
    EXPECT_EQ(cor12_congruence(PrimeContext(17)), std::nullopt);
    EXPECT_EQ(cor12_congruence(PrimeContext(113)), std::optional<bool>(true));
}

TEST(ScanTest, LemmaTwoOneOnSmallRange) {
    ScanConfig cfg;
    cfg.p_min = 5;
    cfg.p_max = 50;
    cfg.checks = {Check::lemma21};
    const auto recs = scan(cfg);
    ASSERT_FALSE(recs.empty());
    for (const auto& r : recs) EXPECT_EQ(r.status, Status::pass) << r.p << " " << r.m;
    EXPECT_TRUE(all_ok(recs));
}

TEST(ScanTest, SkipsWhenTwoIsNotAResidue) {
    ScanConfig cfg;
    cfg.p_min = 31;
    cfg.p_max = 31;
    cfg.checks = {Check::gi};
    const auto recs = scan(cfg);
    const std::uint64_t ord = order_of_two(31);
    std::set<std::uint32_t> ms;
    for (const auto& r : recs) {
        ms.insert(r.m);
        const bool admits = (30 / r.m) % ord == 0;
        EXPECT_EQ(r.status, admits ? Status::pass : Status::skipped) << r.m << " " << r.a;
    }
    EXPECT_EQ(ms, (std::set<std::uint32_t>{1, 3, 5, 15}));
    // a in {1..5} plus p - 1 for each m
    EXPECT_EQ(recs.size(), 4u * 6u);
}

TEST(ScanTest, EmptyRange) {
    ScanConfig cfg;
    cfg.p_min = 24;
    cfg.p_max = 28;
    EXPECT_TRUE(scan(cfg).empty());
}

TEST(ScanTest, RejectsBadConfig) {
    ScanConfig cfg;
    cfg.p_min = 2;
    EXPECT_THROW(scan(cfg), InvalidInputError);
    cfg.p_min = 3;
    cfg.a_count = 0;
    EXPECT_THROW(scan(cfg), InvalidInputError);
}

TEST(ScanTest, ExplicitInadmissibleMIsSkippedNotDropped) {
    ScanConfig cfg;
    cfg.p_min = 13;
    cfg.p_max = 13;
    cfg.m_list = std::vector<std::uint32_t>{4};
    cfg.checks = {Check::gi, Check::lemma21};
    const auto recs = scan(cfg);
    ASSERT_EQ(recs.size(), 6u + 1u);
    for (const auto& r : recs) EXPECT_EQ(r.status, Status::skipped);
}

TEST(ScanTest, EveryTripleOncePerCheckInSortedOrder) {
    ScanConfig cfg;
    cfg.p_min = 3;
    cfg.p_max = 120;
    cfg.threads = 3;
    const auto recs = scan(cfg);
    std::map<std::tuple<std::uint64_t, std::uint32_t, std::int64_t, int>, int> seen;
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        const auto key = std::tuple(r.p, r.m, r.a, static_cast<int>(r.check));
        EXPECT_EQ(++seen[key], 1);
        if (i > 0) {
            const auto& q = recs[i - 1];
            EXPECT_LT(std::tuple(q.p, q.m, q.a, static_cast<int>(q.check)),
                      std::tuple(r.p, r.m, r.a, static_cast<int>(r.check)));
        }
        EXPECT_NE(r.status, Status::fail) << to_json_line(r);
        EXPECT_NE(r.status, Status::error) << to_json_line(r);
    }
    // gi for every admissible (p, m) and every a in the policy
    std::size_t gi = 0, expect_gi = 0;
    for (const auto& r : recs) gi += r.check == Check::gi;
    for (auto p : primes_in_range(3, 120)) {
        for (std::uint64_t m = 1; 2 * m <= p - 1; ++m) {
            if ((p - 1) % (2 * m) == 0) expect_gi += a_values(cfg, p).size();
        }
    }
    EXPECT_EQ(gi, expect_gi);
}

TEST(ScanTest, ThreadCountDoesNotChangeOutput) {
    ScanConfig cfg;
    cfg.p_min = 3;
    cfg.p_max = 90;
    cfg.threads = 1;
    const auto one = scan(cfg);
    cfg.threads = 4;
    const auto four = scan(cfg);
    EXPECT_EQ(one, four);
}

TEST(ScanTest, TimingIsZeroUnlessRequested) {
    ScanConfig cfg;
    cfg.p_min = 3;
    cfg.p_max = 40;
    for (const auto& r : scan(cfg)) EXPECT_EQ(r.elapsed_ms, 0.0);
}

TEST(AValuesTest, Policy) {
    ScanConfig cfg;
    EXPECT_EQ(a_values(cfg, 31), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 30}));
    EXPECT_EQ(a_values(cfg, 5), (std::vector<std::int64_t>{1, 2, 3, 4}));
    EXPECT_EQ(a_values(cfg, 3), (std::vector<std::int64_t>{1, 2}));
    cfg.a_all = true;
    EXPECT_EQ(a_values(cfg, 7).size(), 6u);
}

TEST(ReportTest, EmptyCsvIsHeaderOnly) {
    const auto path = temp_path("empty.csv");
    emit_report({}, ReportFormat::csv, path.string());
    EXPECT_EQ(slurp(path), "p,m,a,check,status,expected,actual,elapsed_ms\n");
    EXPECT_TRUE(load_report(path.string(), ReportFormat::csv).empty());
    std::filesystem::remove(path);
}

TEST(ReportTest, SinglePassRecordJsonl) {
    VerificationRecord r;
    r.p = 31;
    r.m = 3;
    r.a = 1;
    r.check = Check::gi;
    r.expected = "-1*z^31";
    r.actual = "-1*z^31";
    std::ostringstream out;
    write_report({r}, ReportFormat::jsonl, out);
    EXPECT_EQ(out.str(),
              "{\"p\":31,\"m\":3,\"a\":1,\"check\":\"gi\",\"status\":\"pass\",\"expected\":\"-1*z^31\","
              "\"actual\":\"-1*z^31\",\"elapsed_ms\":0.0}\n");
}

TEST(ReportTest, RoundTripRandomRecords) {
    std::mt19937_64 rng(1234);
    const std::vector<std::string> pieces = {"a", ",", "\"", "\n", " ", "z^3", "-1*z^31 + 2*z^0", "\\", "é"};
    auto random_text = [&] {
        std::string s;
        const auto len = rng() % 6;
        for (std::uint64_t i = 0; i < len; ++i) s += pieces[rng() % pieces.size()];
        return s;
    };
    std::vector<VerificationRecord> recs;
    for (int i = 0; i < 100; ++i) {
        VerificationRecord r;
        r.p = rng() % 100000;
        r.m = static_cast<std::uint32_t>(rng() % 50);
        r.a = static_cast<std::int64_t>(rng() % 1000) - 500;
        r.check = kAllChecks[rng() % kAllChecks.size()];
        r.status = static_cast<Status>(rng() % 4);
        if (r.status == Status::error) r.error_text = random_text();
        r.expected = random_text();
        r.actual = random_text();
        r.elapsed_ms = static_cast<double>(rng() % 100000) / 7.0;
        recs.push_back(r);
    }
    for (auto fmt : {ReportFormat::jsonl, ReportFormat::csv}) {
        std::stringstream buf;
        write_report(recs, fmt, buf);
        EXPECT_EQ(read_report(buf, fmt), recs);
    }
}

TEST(ReportTest, ScanReportsAreByteIdentical) {
    ScanConfig cfg;
    cfg.p_min = 3;
    cfg.p_max = 80;
    const auto a = temp_path("a.jsonl"), b = temp_path("b.jsonl");
    emit_report(scan(cfg), ReportFormat::jsonl, a.string());
    cfg.threads = 2;
    emit_report(scan(cfg), ReportFormat::jsonl, b.string());
    EXPECT_EQ(slurp(a), slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(ReportTest, UnwritablePathThrows) {
    EXPECT_THROW(emit_report({}, ReportFormat::jsonl, "/nonexistent/dir/report.jsonl"), std::runtime_error);
}

}  // namespace
}  // namespace resitan

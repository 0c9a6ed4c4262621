#include "helpers.hpp"

#include "twitdyn/errors.hpp"
#include "twitdyn/io.hpp"

#include <sstream>

using namespace twitdyn;

namespace {

std::string hashtag_text(int peak_tweets = 40) {
    std::string s = "day,tweets,users\n";
    for (int d = -7; d <= 7; ++d) {
        const int tweets = d == 0 ? peak_tweets : (d > 0 ? 10 - d : 0);
        const int users = tweets / 2;
        s += std::to_string(d) + "," + std::to_string(tweets) + "," + std::to_string(users) + "\n";
    }
    return s;
}

std::size_t error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_hashtag_csv(in, "x");
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string replace_line(std::string text, int line_no, const std::string& with) {
    std::istringstream in(text);
    std::string out, line;
    for (int k = 1; std::getline(in, line); ++k)
        out += (k == line_no ? with : line) + "\n";
    return out;
}

} // namespace

TEST_CASE("hashtag CSV reads counts", "[io]") {
    std::istringstream in(hashtag_text());
    const auto rec = read_hashtag_csv(in, "#demo");
    CHECK(rec.name == "#demo");
    CHECK(rec.tweets[kPeakIndex] == 40.0);
    CHECK(rec.users[kPeakIndex] == 20.0);
    CHECK(rec.tweets[day_index(3)] == 7.0);
    CHECK(rec.tweets[0] == 0.0);
}

TEST_CASE("hashtag CSV errors name the row", "[io]") {
    const std::string good = hashtag_text();
    // Line 1 is the header, day -7 is on line 2.
    CHECK(error_line(replace_line(good, 2, "-8,0,0")) == 2);
    CHECK(error_line(replace_line(good, 9, "0,4.5,2")) == 9);
    CHECK(error_line(replace_line(good, 9, "0,4,5")) == 9);
    CHECK(error_line(replace_line(good, 10, "1,-3,0")) == 10);
    CHECK(error_line(replace_line(good, 10, "1,3")) == 10);
    CHECK(error_line(replace_line(good, 1, "day,count")) == 1);
    CHECK(error_line(good + "8,1,1\n") == 17);
    CHECK(error_line("day,tweets,users\n-7,1,1\n") != 0);
}

TEST_CASE("engine profiles are accepted as targets", "[io]") {
    ActivityProfile p;
    for (std::size_t d = 0; d < kWindowDays; ++d) {
        p.activities[d] = 1.5 * static_cast<double>(d) + 0.25;
        p.distinct_users[d] = static_cast<double>(d) / 3.0;
    }
    std::stringstream buf;
    write_profile_csv(buf, p);
    const auto rec = read_hashtag_csv(buf, "sim");
    for (std::size_t d = 0; d < kWindowDays; ++d) {
        CHECK(rec.tweets[d] == Catch::Approx(p.activities[d]).epsilon(1e-11));
        CHECK(rec.users[d] == Catch::Approx(p.distinct_users[d]).epsilon(1e-11));
    }
}

TEST_CASE("fit report keys and order", "[io]") {
    FitResult r;
    r.params.lambda = 0.5;
    r.params.eta_star = 10;
    r.params.delta_t = 2;
    r.delta_tweets = 0.01;
    r.delta_users = 0.02;
    r.objective = 0.02;
    r.good = true;
    const auto json = fit_report_json("#tag", r, classify_params(0.5, 10, 2));
    const char* keys[] = {"\"hashtag\"", "\"lambda\"", "\"eta_star\"", "\"delta_t\"",
                          "\"delta_tweets\"", "\"delta_users\"", "\"objective\"", "\"good\"",
                          "\"class\""};
    std::size_t pos = 0;
    for (const char* k : keys) {
        const auto at = json.find(k, pos);
        REQUIRE(at != std::string::npos);
        pos = at;
    }
    CHECK(json.find("\"class\": \"S\"") != std::string::npos);

    std::istringstream in(json);
    const auto back = read_fit_json(in);
    CHECK(back.lambda == 0.5);
    CHECK(back.eta_star == 10.0);
    CHECK(back.delta_t == 2);

    std::istringstream broken("{\"lambda\": 1}");
    CHECK_THROWS_AS(read_fit_json(broken), ParseError);
    std::istringstream garbage("not json");
    CHECK_THROWS_AS(read_fit_json(garbage), ParseError);
}

TEST_CASE("scan CSV", "[io]") {
    const std::vector<ScanPoint> pts{{0.1, 2, 3, 0.05, 0.06, 0.06}, {0.2, 2, 3, 0.5, 0.25, 0.5}};
    std::ostringstream out;
    write_scan_csv(out, pts);
    CHECK(out.str() == "lambda,eta_star,delta_t,delta_tweets,delta_users\n"
                       "0.1,2,3,0.05,0.06\n0.2,2,3,0.5,0.25\n");
}

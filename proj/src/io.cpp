#include "twitdyn/io.hpp"

#include "twitdyn/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace twitdyn {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = line.find(',');
        out.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

template <class T>
bool parse_exact(std::string_view tok, T& value) {
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

double parse_count(std::string_view tok, bool integral, std::size_t line_no, const char* column) {
    double value = 0.0;
    if (integral) {
        long long n = 0;
        if (!parse_exact(tok, n))
            throw ParseError(line_no, std::string(column) + " must be an integer, got '" +
                                          std::string(tok) + "'");
        value = static_cast<double>(n);
    } else if (!parse_exact(tok, value) || !std::isfinite(value)) {
        throw ParseError(line_no,
                         std::string(column) + " must be a number, got '" + std::string(tok) + "'");
    }
    if (value < 0.0)
        throw ParseError(line_no, std::string(column) + " must be nonnegative");
    return value;
}

} // namespace

HashtagRecord read_hashtag_csv(std::istream& in, std::string name) {
    HashtagRecord rec;
    rec.name = std::move(name);

    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    bool integral = true;
    std::size_t rows = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (!have_header) {
            if (line == "day,tweets,users")
                integral = true;
            else if (line == "day,activities,distinct_users")
                integral = false;
            else
                throw ParseError(line_no, "expected header 'day,tweets,users'");
            have_header = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 3)
            throw ParseError(line_no, "expected 3 fields");
        if (rows == kWindowDays)
            throw ParseError(line_no, "more than 15 day rows");
        int day = 0;
        if (!parse_exact(fields[0], day))
            throw ParseError(line_no, "day must be an integer");
        if (day != index_day(rows))
            throw ParseError(line_no, "expected day " + std::to_string(index_day(rows)) +
                                          ", got " + std::to_string(day) +
                                          " (days must run -7..7)");
        const double tweets = parse_count(fields[1], integral, line_no, "tweets");
        const double users = parse_count(fields[2], integral, line_no, "users");
        if (users > tweets)
            throw ParseError(line_no, "users exceed tweets");
        rec.tweets[rows] = tweets;
        rec.users[rows] = users;
        ++rows;
    }
    if (in.bad())
        throw IoError("failed reading hashtag series");
    if (!have_header)
        throw ParseError(line_no, "missing header");
    if (rows != kWindowDays)
        throw ParseError(line_no, "expected 15 day rows, got " + std::to_string(rows));
    return rec;
}

HashtagRecord read_hashtag_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open hashtag file '" + path + "'");
    return read_hashtag_csv(in, std::filesystem::path(path).stem().string());
}

std::string fit_report_json(const std::string& hashtag, const FitResult& result,
                            const ClassLabel& label) {
    nlohmann::ordered_json j;
    j["hashtag"] = hashtag;
    j["lambda"] = result.params.lambda;
    j["eta_star"] = result.params.eta_star;
    j["delta_t"] = result.params.delta_t;
    j["delta_tweets"] = result.delta_tweets;
    j["delta_users"] = result.delta_users;
    j["objective"] = result.objective;
    j["good"] = result.good;
    j["class"] = label.to_string();
    return j.dump(2);
}

void write_scan_csv(std::ostream& out, std::span<const ScanPoint> points) {
    out << "lambda,eta_star,delta_t,delta_tweets,delta_users\n";
    char buf[160];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%d,%.12g,%.12g\n", p.lambda, p.eta_star,
                      p.delta_t, p.delta_tweets, p.delta_users);
        out << buf;
    }
}

FittedParams read_fit_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("malformed fit JSON: ") + e.what());
    }
    FittedParams p;
    try {
        p.lambda = j.at("lambda").get<double>();
        p.eta_star = j.at("eta_star").get<double>();
        p.delta_t = j.at("delta_t").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("fit JSON lacks parameters: ") + e.what());
    }
    return p;
}

} // namespace twitdyn

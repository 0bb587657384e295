#include "ldeq/io.hpp"

#include "text.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ldeq {

std::string to_string(ProfileClass c) {
    switch (c) {
    case ProfileClass::kSinglePeaked: return "sp";
    case ProfileClass::kSymmetric: return "sym";
    case ProfileClass::kDistance: return "db";
    }
    return "?";
}

namespace {

ProfileClass parse_class(std::string_view w, int line) {
    if (w == "sp") return ProfileClass::kSinglePeaked;
    if (w == "sym") return ProfileClass::kSymmetric;
    if (w == "db") return ProfileClass::kDistance;
    throw ParseError(line, "unknown class tag '" + std::string(w) + "'");
}

// "a > b > c" -> voters; an empty string gives an empty list.
std::vector<Voter> parse_chain(std::string_view s, int line, int n, bool allow_zero) {
    std::vector<Voter> out;
    s = text::trim(s);
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        auto gt = s.find('>', start);
        auto item = text::trim(s.substr(start, gt == std::string_view::npos ? gt : gt - start));
        if (item.empty()) throw ParseError(line, "empty entry in preference chain");
        auto v = text::to_int(item, line, "outcome");
        if (v < (allow_zero ? 0 : 1) || v > n) {
            throw ParseError(line, "outcome " + std::to_string(v) + " out of range");
        }
        out.push_back(static_cast<Voter>(v));
        if (gt == std::string_view::npos) break;
        start = gt + 1;
    }
    return out;
}

} // namespace

std::vector<Voter> complete_partial(int n, Voter i, bool abstainer, const std::vector<Voter>& acc) {
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::vector<Voter> row;
    for (Voter j : acc) {
        if (j < 1 || j > n) throw std::invalid_argument("acceptable voter " + std::to_string(j) + " out of range");
        if (j == i) throw std::invalid_argument("voter " + std::to_string(i) + " lists herself as acceptable");
        if (used[j]) throw std::invalid_argument("acceptable voter " + std::to_string(j) + " listed twice");
        used[j] = 1;
        row.push_back(j);
    }
    if (abstainer) {
        row.push_back(kAbstain);
        row.push_back(i);
    } else {
        row.push_back(i);
        row.push_back(kAbstain);
    }
    used[i] = 1;
    for (Voter j = 1; j <= n; ++j) {
        if (!used[j]) row.push_back(j);
    }
    return row;
}

ProfileDocument parse_profile(const std::string& input) {
    ProfileDocument doc;
    int n = -1;
    std::vector<std::optional<std::vector<Voter>>> rows;
    int line_no = 0;
    for (auto raw : text::split_lines(input)) {
        ++line_no;
        auto line = text::trim(text::strip_comment(raw));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            auto w = text::words(line);
            if (w[0] == "n") {
                if (n >= 0) throw ParseError(line_no, "duplicate 'n' header");
                if (w.size() != 2) throw ParseError(line_no, "expected 'n <voters>'");
                n = static_cast<int>(text::to_int(w[1], line_no, "voter count"));
                if (n < 0) throw ParseError(line_no, "negative voter count");
                rows.assign(static_cast<size_t>(n), std::nullopt);
            } else if (w[0] == "class") {
                for (size_t k = 1; k < w.size(); ++k) doc.classes.push_back(parse_class(w[k], line_no));
            } else if (w[0] == "axis") {
                doc.axis = std::string(text::trim(line.substr(4)));
            } else {
                throw ParseError(line_no, "unrecognised line");
            }
            continue;
        }
        if (n < 0) throw ParseError(line_no, "voter line before the 'n <voters>' header");
        auto id = text::to_int(text::trim(line.substr(0, colon)), line_no, "voter id");
        if (id < 1 || id > n) throw ParseError(line_no, "voter " + std::to_string(id) + " out of range");
        auto& slot = rows[static_cast<size_t>(id - 1)];
        if (slot) throw ParseError(line_no, "voter " + std::to_string(id) + " given twice");
        auto body = text::trim(line.substr(colon + 1));
        auto acc_pos = body.find("acc:");
        if (acc_pos != std::string_view::npos) {
            auto flag = text::trim(body.substr(0, acc_pos));
            bool abstainer;
            if (flag == "voter") abstainer = false;
            else if (flag == "abstainer") abstainer = true;
            else throw ParseError(line_no, "expected 'voter' or 'abstainer' before 'acc:'");
            auto acc = parse_chain(body.substr(acc_pos + 4), line_no, n, false);
            try {
                slot = complete_partial(n, static_cast<Voter>(id), abstainer, acc);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            doc.partial = true;
            continue;
        }
        auto chain = parse_chain(body, line_no, n, true);
        if (static_cast<int>(chain.size()) != n + 1) {
            throw ParseError(line_no, "voter " + std::to_string(id) + " ranks " + std::to_string(chain.size()) +
                                          " outcomes, expected " + std::to_string(n + 1));
        }
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (Voter o : chain) {
            if (seen[o]) throw ParseError(line_no, "outcome " + std::to_string(o) + " ranked twice");
            seen[o] = 1;
        }
        slot = std::move(chain);
    }
    if (n < 0) throw ParseError(0, "missing 'n <voters>' header");
    std::vector<std::vector<Voter>> rankings;
    for (int i = 0; i < n; ++i) {
        if (!rows[i]) throw ParseError(0, "voter " + std::to_string(i + 1) + " has no preference line");
        rankings.push_back(std::move(*rows[i]));
    }
    doc.profile = PreferenceProfile(std::move(rankings));
    return doc;
}

std::string format_profile(const PreferenceProfile& p, const ProfileFormat& fmt) {
    std::ostringstream os;
    os << "n " << p.size() << '\n';
    if (!fmt.classes.empty()) {
        os << "class";
        for (auto c : fmt.classes) os << ' ' << to_string(c);
        os << '\n';
    }
    if (!fmt.axis.empty()) os << "axis " << fmt.axis << '\n';
    os << fmt.comments;
    for (Voter i = 1; i <= p.size(); ++i) {
        os << i << ':';
        if (fmt.partial) {
            os << ' ' << (p.is_abstainer(i) ? "abstainer" : "voter") << " acc:";
            auto acc = p.acceptable(i);
            for (size_t k = 0; k < acc.size(); ++k) os << (k ? " > " : " ") << acc[k];
        } else {
            auto r = p.ranking(i);
            for (size_t k = 0; k < r.size(); ++k) os << (k ? " > " : " ") << r[k];
        }
        os << '\n';
    }
    return os.str();
}

Delegation parse_delegation(const std::string& input, int n) {
    std::vector<std::optional<Voter>> targets(static_cast<size_t>(n));
    int line_no = 0;
    for (auto raw : text::split_lines(input)) {
        ++line_no;
        auto line = text::trim(text::strip_comment(raw));
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'i: j'");
        auto i = text::to_int(text::trim(line.substr(0, colon)), line_no, "voter id");
        auto j = text::to_int(text::trim(line.substr(colon + 1)), line_no, "delegation target");
        if (i < 1 || i > n) throw ParseError(line_no, "voter " + std::to_string(i) + " out of range");
        if (j < 0 || j > n) throw ParseError(line_no, "target " + std::to_string(j) + " out of range");
        auto& slot = targets[static_cast<size_t>(i - 1)];
        if (slot) throw ParseError(line_no, "voter " + std::to_string(i) + " given twice");
        slot = static_cast<Voter>(j);
    }
    std::vector<Voter> out;
    for (int i = 0; i < n; ++i) {
        if (!targets[i]) throw ParseError(0, "voter " + std::to_string(i + 1) + " has no delegation");
        out.push_back(*targets[i]);
    }
    return Delegation(std::move(out));
}

std::string format_delegation(const Delegation& d) {
    std::ostringstream os;
    for (Voter i = 1; i <= d.size(); ++i) os << i << ": " << d[i] << '\n';
    return os.str();
}

std::string profile_digest(const PreferenceProfile& p) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : format_profile(p)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace ldeq

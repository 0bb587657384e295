#ifndef LDEQ_IO_HPP
#define LDEQ_IO_HPP

#include "ldeq/parse_error.hpp"
#include "ldeq/profile.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ldeq {

enum class ProfileClass { kSinglePeaked, kSymmetric, kDistance };

std::string to_string(ProfileClass c); // "sp", "sym", "db"

// Profile text format:
//
//   n 4
//   class sp sym          (optional)
//   axis identity         (optional, free text)
//   1: 2 > 1 > 0 > 3 > 4  (full form: all n+1 outcomes)
//   2: voter acc: 1 > 3   (partial form: Acc in order)
//   3: abstainer acc:
//
// '#' starts a comment. Partial lines are completed as: Acc in the listed
// order, then self and 0 (0 first for abstainers), then the remaining voters
// ascending.
struct ProfileDocument {
    PreferenceProfile profile;
    std::vector<ProfileClass> classes;
    std::string axis;
    bool partial = false; // some voter was given in partial form
};

ProfileDocument parse_profile(const std::string& text);

struct ProfileFormat {
    bool partial = false;
    std::vector<ProfileClass> classes;
    std::string axis;
    std::string comments; // emitted verbatim after the header, e.g. role blocks
};

std::string format_profile(const PreferenceProfile& p, const ProfileFormat& fmt = {});

// Completion of a partial description. Throws std::invalid_argument when Acc
// repeats a voter, names i herself, or names 0.
std::vector<Voter> complete_partial(int n, Voter i, bool abstainer, const std::vector<Voter>& acc);

// One "i: j" line per voter.
Delegation parse_delegation(const std::string& text, int n);
std::string format_delegation(const Delegation& d);

// FNV-1a over the canonical full-form text, as 16 hex digits.
std::string profile_digest(const PreferenceProfile& p);

} // namespace ldeq

#endif

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coauthnet {

/// Inclusive interval of calendar years.
struct YearRange {
    int from = 0;
    int to = 0;

    bool contains(int year) const noexcept { return from <= year && year <= to; }
    friend bool operator==(const YearRange&, const YearRange&) = default;
    friend auto operator<=>(const YearRange&, const YearRange&) = default;
};

struct Member {
    std::string id;
    std::string name;
};

/// Members in file order with id lookup.
class MemberRegistry {
public:
    /// Throws InputError on empty, duplicate or ill-formed ids.
    void add(Member member);

    const std::vector<Member>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(std::string_view id) const;
    const Member* find(std::string_view id) const;

private:
    std::vector<Member> members_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct Publication {
    std::string paper_id;
    int year = 0;
    std::string title;
    std::vector<std::string> author_ids; // distinct, in first-seen order
};

/// Non-fatal issue found while parsing.
struct ParseWarning {
    std::string file;
    std::size_t line = 0;
    std::string message;
};

struct PublicationSet {
    std::vector<Publication> publications; // file order
    std::vector<ParseWarning> warnings;
};

struct ParseOptions {
    int min_year = 1900;
    int max_year = 2100;
};

MemberRegistry parse_members(const std::filesystem::path& path);
MemberRegistry parse_members_text(std::string_view text, const std::string& source_name);

PublicationSet parse_publications(const std::filesystem::path& path, const MemberRegistry& registry,
                                  const ParseOptions& options = {});
PublicationSet parse_publications_text(std::string_view text, const std::string& source_name,
                                       const MemberRegistry& registry, const ParseOptions& options = {});

/// Weighted co-authorship pair. `a < b` lexicographically and
/// `weight == paper_ids.size()`.
struct EdgeRecord {
    std::string a;
    std::string b;
    unsigned weight = 0;
    std::vector<std::string> paper_ids; // sorted

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Every pair of distinct authors on an in-range paper gains one unit of
/// weight. Output is sorted by (a, b). Throws InputError if from > to.
std::vector<EdgeRecord> derive_edges(const PublicationSet& pubs, YearRange range);

/// Members plus publications, loaded together.
struct Corpus {
    MemberRegistry members;
    PublicationSet publications;

    /// Smallest and largest publication year. Throws UndefinedStatistic
    /// when there are no publications.
    YearRange year_bounds() const;
};

Corpus load_corpus(const std::filesystem::path& members_path, const std::filesystem::path& papers_path,
                   const ParseOptions& options = {});

} // namespace coauthnet

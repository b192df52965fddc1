#include "coauthnet/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_set>
#include <utility>

#include "coauthnet/error.hpp"
#include "csv.hpp"

namespace coauthnet {

namespace {

bool valid_id(std::string_view id) {
    return !id.empty() && id.find_first_of(",;\n\r") == std::string_view::npos;
}

void expect_header(const std::vector<csv::Record>& records, const std::vector<std::string>& expected,
                   const std::string& source) {
    if (records.empty() || records.front().line != 1)
        throw InputError(source, 1, "missing header line");
    const auto& fields = records.front().fields;
    bool ok = fields.size() == expected.size();
    for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = csv::trim(fields[i]) == expected[i];
    if (!ok) {
        std::string want;
        for (const auto& e : expected) want += (want.empty() ? "" : ",") + e;
        throw InputError(source, 1, "expected header '" + want + "'");
    }
}

} // namespace

void MemberRegistry::add(Member member) {
    if (member.id.empty()) throw InputError("empty member id");
    if (!valid_id(member.id)) throw InputError("member id '" + member.id + "' contains a comma, semicolon or newline");
    if (index_.contains(member.id)) throw InputError("duplicate member id '" + member.id + "'");
    index_.emplace(member.id, members_.size());
    members_.push_back(std::move(member));
}

bool MemberRegistry::contains(std::string_view id) const {
    return find(id) != nullptr;
}

const Member* MemberRegistry::find(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &members_[it->second];
}

MemberRegistry parse_members_text(std::string_view text, const std::string& source_name) {
    const auto records = csv::parse(text, source_name);
    expect_header(records, {"id", "name"}, source_name);

    MemberRegistry registry;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != 2)
            throw InputError(source_name, rec.line,
                             "expected 2 columns, found " + std::to_string(rec.fields.size()));
        Member member{std::string(csv::trim(rec.fields[0])), std::string(csv::trim(rec.fields[1]))};
        try {
            registry.add(std::move(member));
        } catch (const InputError& e) {
            throw InputError(source_name, rec.line, e.reason());
        }
    }
    return registry;
}

MemberRegistry parse_members(const std::filesystem::path& path) {
    return parse_members_text(csv::read_file(path), path.string());
}

PublicationSet parse_publications_text(std::string_view text, const std::string& source_name,
                                       const MemberRegistry& registry, const ParseOptions& options) {
    const auto records = csv::parse(text, source_name);
    expect_header(records, {"paper_id", "year", "title", "author_ids"}, source_name);

    PublicationSet set;
    std::unordered_set<std::string> seen_papers;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        const auto fail = [&](const std::string& reason) { throw InputError(source_name, rec.line, reason); };
        if (rec.fields.size() != 4)
            fail("expected 4 columns, found " + std::to_string(rec.fields.size()));

        Publication pub;
        pub.paper_id = std::string(csv::trim(rec.fields[0]));
        if (!valid_id(pub.paper_id)) fail("invalid paper id '" + pub.paper_id + "'");
        if (!seen_papers.insert(pub.paper_id).second) fail("duplicate paper id '" + pub.paper_id + "'");

        const auto year_text = csv::trim(rec.fields[1]);
        const auto [end, ec] = std::from_chars(year_text.data(), year_text.data() + year_text.size(), pub.year);
        if (year_text.empty() || ec != std::errc{} || end != year_text.data() + year_text.size())
            fail("year '" + std::string(year_text) + "' is not an integer");
        if (pub.year < options.min_year || pub.year > options.max_year)
            fail("year " + std::to_string(pub.year) + " outside " + std::to_string(options.min_year) + "-" +
                 std::to_string(options.max_year));

        pub.title = rec.fields[2];

        std::string_view authors = rec.fields[3];
        std::vector<std::string> duplicates;
        while (true) {
            const auto cut = authors.find(';');
            const auto token = csv::trim(authors.substr(0, cut));
            if (!token.empty()) {
                std::string id(token);
                if (!registry.contains(id)) fail("unknown author id '" + id + "'");
                if (std::find(pub.author_ids.begin(), pub.author_ids.end(), id) != pub.author_ids.end())
                    duplicates.push_back(std::move(id));
                else
                    pub.author_ids.push_back(std::move(id));
            }
            if (cut == std::string_view::npos) break;
            authors.remove_prefix(cut + 1);
        }
        if (pub.author_ids.empty()) fail("paper '" + pub.paper_id + "' has no authors");

        if (!duplicates.empty()) {
            std::string list;
            for (const auto& d : duplicates) list += (list.empty() ? "" : ", ") + d;
            set.warnings.push_back({source_name, rec.line,
                                    "paper '" + pub.paper_id + "' lists author(s) more than once: " + list});
        }
        if (pub.author_ids.size() < 2)
            set.warnings.push_back({source_name, rec.line,
                                    "paper '" + pub.paper_id + "' has a single member author and adds no edges"});
        set.publications.push_back(std::move(pub));
    }
    return set;
}

PublicationSet parse_publications(const std::filesystem::path& path, const MemberRegistry& registry,
                                  const ParseOptions& options) {
    return parse_publications_text(csv::read_file(path), path.string(), registry, options);
}

std::vector<EdgeRecord> derive_edges(const PublicationSet& pubs, YearRange range) {
    if (range.from > range.to)
        throw InputError("year range " + std::to_string(range.from) + "-" + std::to_string(range.to) +
                         " is inverted");

    std::map<std::pair<std::string, std::string>, std::vector<std::string>> pairs;
    for (const auto& pub : pubs.publications) {
        if (!range.contains(pub.year)) continue;
        const auto& authors = pub.author_ids;
        for (std::size_t i = 0; i < authors.size(); ++i) {
            for (std::size_t j = i + 1; j < authors.size(); ++j) {
                auto key = authors[i] < authors[j] ? std::pair{authors[i], authors[j]}
                                                   : std::pair{authors[j], authors[i]};
                pairs[std::move(key)].push_back(pub.paper_id);
            }
        }
    }

    std::vector<EdgeRecord> edges;
    edges.reserve(pairs.size());
    for (auto& [key, papers] : pairs) {
        std::sort(papers.begin(), papers.end());
        edges.push_back({key.first, key.second, static_cast<unsigned>(papers.size()), std::move(papers)});
    }
    return edges;
}

YearRange Corpus::year_bounds() const {
    const auto& pubs = publications.publications;
    if (pubs.empty()) throw UndefinedStatistic("corpus has no publications");
    const auto [lo, hi] = std::minmax_element(pubs.begin(), pubs.end(),
                                              [](const auto& a, const auto& b) { return a.year < b.year; });
    return {lo->year, hi->year};
}

Corpus load_corpus(const std::filesystem::path& members_path, const std::filesystem::path& papers_path,
                   const ParseOptions& options) {
    Corpus corpus;
    corpus.members = parse_members(members_path);
    corpus.publications = parse_publications(papers_path, corpus.members, options);
    return corpus;
}

} // namespace coauthnet

#include "csv.hpp"

#include <fstream>
#include <sstream>

#include "coauthnet/error.hpp"

namespace coauthnet::csv {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::string read_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec))
        throw InputError(path.string(), 0, "file not found");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string(), 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

std::vector<Record> parse(std::string_view text, const std::string& source_name) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Record> records;
    Record current;
    std::string field;
    bool in_quotes = false;
    bool after_quote = false; // closing quote seen, only a delimiter may follow
    bool record_has_content = false;
    std::size_t line = 1;
    current.line = 1;

    auto end_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        after_quote = false;
    };
    auto end_record = [&] {
        if (record_has_content) {
            end_field();
            records.push_back(std::move(current));
        }
        current = Record{};
        field.clear();
        after_quote = false;
        record_has_content = false;
    };

    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (in_quotes) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field.push_back('"');
                    ++pos;
                } else {
                    in_quotes = false;
                    after_quote = true;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') continue;
        if (c == '\n' || c == '\r') {
            end_record();
            ++line;
            current.line = line;
            continue;
        }
        if (!record_has_content) {
            record_has_content = true;
            current.line = line;
        }
        if (c == ',') {
            end_field();
        } else if (after_quote) {
            throw InputError(source_name, line, "unexpected character after closing quote");
        } else if (c == '"' && field.empty()) {
            in_quotes = true;
        } else {
            field.push_back(c);
        }
    }
    if (in_quotes) throw InputError(source_name, current.line, "unterminated quoted field");
    end_record();
    return records;
}

} // namespace coauthnet::csv

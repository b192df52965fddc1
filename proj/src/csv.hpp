#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace coauthnet::csv {

struct Record {
    std::size_t line = 0; // 1-based line where the record starts
    std::vector<std::string> fields;
};

/// RFC 4180 style: comma separated, double-quoted fields may contain commas,
/// newlines and doubled quotes. Accepts LF and CRLF, strips a UTF-8 BOM and
/// skips blank lines. Throws InputError on an unterminated quote or stray
/// characters after a closing quote.
std::vector<Record> parse(std::string_view text, const std::string& source_name);

/// Whole file as bytes. Throws InputError("file not found") when absent.
std::string read_file(const std::filesystem::path& path);

std::string_view trim(std::string_view s);

} // namespace coauthnet::csv

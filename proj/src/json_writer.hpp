#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coauthnet::detail {

/// Streaming JSON emitter with caller-controlled key order and number
/// formatting, so equal inputs always give equal bytes. Pretty-prints with
/// two-space indentation and LF line endings.
class JsonWriter {
public:
    JsonWriter& begin_object() { open('{'); return *this; }
    JsonWriter& end_object() { close('}'); return *this; }
    JsonWriter& begin_array() { open('['); return *this; }
    JsonWriter& end_array() { close(']'); return *this; }

    JsonWriter& key(std::string_view k) {
        separate();
        write_string(k);
        out_ += ": ";
        pending_key_ = true;
        return *this;
    }

    JsonWriter& value(std::string_view s) { separate(); write_string(s); return *this; }
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& value(std::int64_t v) { separate(); out_ += std::to_string(v); return *this; }
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(unsigned v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(std::uint64_t v) { separate(); out_ += std::to_string(v); return *this; }
    JsonWriter& null() { separate(); out_ += "null"; return *this; }

    /// Shortest representation that reads back to the same double.
    JsonWriter& value(double v) {
        separate();
        if (!std::isfinite(v)) { out_ += "null"; return *this; }
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        out_.append(buf, res.ptr);
        return *this;
    }

    /// Fixed-point with `decimals` digits; negative zero prints unsigned.
    JsonWriter& fixed(double v, int decimals) {
        separate();
        if (!std::isfinite(v)) { out_ += "null"; return *this; }
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
        std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
        if (text.starts_with('-') && text.find_first_not_of("-0.") == std::string_view::npos) text.remove_prefix(1);
        out_ += text;
        return *this;
    }

    std::string str() const { return out_ + "\n"; }

private:
    struct Level {
        bool first = true;
    };

    void separate() {
        if (pending_key_) {
            pending_key_ = false;
            return;
        }
        if (levels_.empty()) return;
        if (!levels_.back().first) out_ += ',';
        levels_.back().first = false;
        newline();
    }

    void open(char c) {
        separate();
        out_ += c;
        levels_.push_back({});
    }

    void close(char c) {
        const bool empty = levels_.back().first;
        levels_.pop_back();
        if (!empty) newline();
        out_ += c;
    }

    void newline() {
        out_ += '\n';
        out_.append(levels_.size() * 2, ' ');
    }

    void write_string(std::string_view s) {
        out_ += '"';
        for (const char ch : s) {
            const auto c = static_cast<unsigned char>(ch);
            switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\r': out_ += "\\r"; break;
            case '\t': out_ += "\\t"; break;
            default:
                if (c < 0x20) {
                    static constexpr char hex[] = "0123456789abcdef";
                    out_ += "\\u00";
                    out_ += hex[c >> 4];
                    out_ += hex[c & 0xF];
                } else {
                    out_ += ch;
                }
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<Level> levels_;
    bool pending_key_ = false;
};

} // namespace coauthnet::detail

#include "serve.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <httplib.h>
#include <json.hpp>

namespace coauthnet::cli {

namespace {

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

std::string escape_html(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Used only when the explorer assets are not installed next to the data.
std::string fallback_page(const std::filesystem::path& manifest_path) {
    std::string items;
    try {
        const auto manifest = nlohmann::json::parse(read_all(manifest_path));
        for (const auto& r : manifest.at("ranges")) {
            const auto file = escape_html(r.at("file").get<std::string>());
            items += "<li><a href=\"" + file + "\">" + std::to_string(r.at("from").get<int>()) + "&ndash;" +
                     std::to_string(r.at("to").get<int>()) + "</a></li>\n";
        }
    } catch (const nlohmann::json::exception&) {
        items = "<li>manifest.json could not be read</li>\n";
    }
    return "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\"><title>Collaboration graph</title></head>\n"
           "<body><h1>Collaboration graph datasets</h1>\n<p>Explorer assets are not installed in this "
           "directory; the datasets are listed below.</p>\n<ul>\n" +
           items + "</ul></body></html>\n";
}

} // namespace

DatasetServer::DatasetServer(std::filesystem::path root)
    : root_(std::move(root)), server_(std::make_unique<httplib::Server>()) {
    if (!std::filesystem::is_regular_file(root_ / "manifest.json"))
        throw std::runtime_error("missing manifest: " + (root_ / "manifest.json").string());

    server_->Get("/", [this](const httplib::Request&, httplib::Response& res) {
        const auto index = root_ / "index.html";
        if (std::filesystem::is_regular_file(index))
            res.set_content(read_all(index), "text/html; charset=utf-8");
        else
            res.set_content(fallback_page(root_ / "manifest.json"), "text/html; charset=utf-8");
    });
    if (!server_->set_mount_point("/", root_.string()))
        throw std::runtime_error("cannot serve directory " + root_.string());
    server_->set_file_extension_and_mimetype_mapping("json", "application/json");
    // SO_REUSEADDR only: a port held by another server must be reported as
    // busy, which SO_REUSEPORT would silently allow.
    server_->set_socket_options([](int sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
}

DatasetServer::~DatasetServer() = default;

int DatasetServer::bind(const std::string& host, int port) {
    if (port == 0) {
        const int bound = server_->bind_to_any_port(host);
        if (bound <= 0) throw std::runtime_error("cannot bind to " + host);
        return bound;
    }
    if (!server_->bind_to_port(host, port))
        throw std::runtime_error("port " + std::to_string(port) + " is unavailable (already in use?)");
    return port;
}

void DatasetServer::run() {
    server_->listen_after_bind();
}

void DatasetServer::stop() {
    server_->stop();
}

} // namespace coauthnet::cli

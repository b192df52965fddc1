#pragma once

#include <filesystem>
#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace coauthnet::cli {

/// Static HTTP server for an analysis output directory: manifest.json, the
/// graph-<from>-<to>.json datasets and the explorer assets found there.
/// When the directory has no index.html a minimal page listing the
/// datasets is served at "/".
class DatasetServer {
public:
    /// Throws std::runtime_error when `root` has no manifest.json.
    explicit DatasetServer(std::filesystem::path root);
    ~DatasetServer();

    DatasetServer(const DatasetServer&) = delete;
    DatasetServer& operator=(const DatasetServer&) = delete;

    /// Binds without serving. Port 0 picks a free port. Returns the bound
    /// port; throws std::runtime_error when the port is unavailable.
    int bind(const std::string& host, int port);

    /// Blocks until stop() is called.
    void run();
    void stop();

private:
    std::filesystem::path root_;
    std::unique_ptr<httplib::Server> server_;
};

} // namespace coauthnet::cli

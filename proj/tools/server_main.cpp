#include <iostream>

#include <CLI11.hpp>

#include "ziggu/service.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Ziggu puzzle solver service (JSON over HTTP)"};
  app.name("ziggu-server");
  ziggu::service::ServerOptions opts;
  std::string webui, snapshots;
  app.add_option("--addr", opts.addr, "listen address")->envname("ZIGGU_ADDR")->capture_default_str();
  app.add_option("--port", opts.port, "listen port")
      ->envname("ZIGGU_PORT")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  app.add_option("--webui", webui, "directory with the built web UI, served under /")
      ->check(CLI::ExistingDirectory);
  app.add_option("--snapshots", snapshots, "directory for per-session JSON snapshots");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "ziggu-server: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (!webui.empty()) opts.webui_dir = webui;
  if (!snapshots.empty()) opts.snapshot_dir = snapshots;
  return ziggu::service::serve(opts, std::cout) ? 0 : 1;
}

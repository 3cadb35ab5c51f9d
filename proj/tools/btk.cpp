// Command-line front end: descriptor-driven reports on valued root data,
// apartments, affine Weyl combinatorics, rank-1 verification and the
// comparison isomorphisms.

#include <iostream>

#include <CLI11.hpp>

#include "btk/render.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bruhat-tits-kit: exact valued-root-datum calculator"};
  app.require_subcommand(1);

  std::string group_path;
  std::string format = "text";
  std::string window = "4";
  unsigned long long seed = 0;
  long long length_bound = 6;
  app.add_option("--group", group_path, "group descriptor file")->required();
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--window", window, "wall window radius (rational)");
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--length-bound", length_bound, "length bound for enumerations");

  auto* cmd_apartment =
      app.add_subcommand("apartment", "level sets, walls and the alcove basis");
  auto* cmd_facet = app.add_subcommand("facet", "locate the facet of a point");
  std::string facet_point;
  cmd_facet->add_option("point", facet_point, "comma-separated rationals")
      ->required();
  auto* cmd_star =
      app.add_subcommand("star", "star of a facet and its parabolic table");
  std::string star_point;
  cmd_star->add_option("point", star_point, "comma-separated rationals")
      ->required();
  auto* cmd_cosets = app.add_subcommand("cosets", "double coset representatives");
  std::string jset, jpset;
  long long coset_bound = -1;
  cmd_cosets->add_option("J", jset, "subset of simple reflections, e.g. {0,1}")
      ->required();
  cmd_cosets->add_option("Jp", jpset, "second subset")->required();
  cmd_cosets->add_option("L", coset_bound,
                         "length bound (defaults to --length-bound)");
  auto* cmd_verify =
      app.add_subcommand("verify", "rank-1 valuation axiom verification");
  auto* cmd_compare =
      app.add_subcommand("compare", "comparison isomorphism wall check");

  CLI11_PARSE(app, argc, argv);

  try {
    btk::GroupDescriptor desc = btk::load_descriptor(group_path);
    btk::Rat win = btk::Rat::parse(window);
    btk::CommandResult res;
    if (cmd_apartment->parsed()) {
      res = btk::run_apartment(desc, win);
    } else if (cmd_facet->parsed()) {
      res = btk::run_facet(desc, btk::parse_point(facet_point, desc.rank));
    } else if (cmd_star->parsed()) {
      res = btk::run_star(desc, btk::parse_point(star_point, desc.rank));
    } else if (cmd_cosets->parsed()) {
      res = btk::run_cosets(desc, btk::parse_index_set(jset),
                            btk::parse_index_set(jpset),
                            coset_bound < 0 ? length_bound : coset_bound);
    } else if (cmd_verify->parsed()) {
      res = btk::run_verify(desc, seed);
    } else if (cmd_compare->parsed()) {
      res = btk::run_compare(desc, win);
    }
    std::cout << res.output(format == "json");
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

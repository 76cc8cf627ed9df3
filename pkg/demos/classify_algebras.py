"""Run the whole-algebra classification over the built-in graph gallery.

Each predicate answers a question about every ideal of the algebra at once
by inspecting the graph; negative verdicts carry witnesses.
"""

from lpaideals import classify_algebra, corpus

SHORT = {
    "all_ideals_graded": "graded",
    "zero_completely_irreducible": "zero-ci",
    "every_proper_ideal_completely_irreducible": "all-ci",
    "irreducible_equals_completely_irreducible": "irr=ci",
    "every_proper_ideal_product_of_comp_irred": "products",
}


def main():
    graphs = sorted(corpus().items())
    header = ["graph".ljust(18)] + [SHORT[k].rjust(8) for k in SHORT]
    print("".join(header))
    for name, graph in graphs:
        rep = classify_algebra(graph)
        row = [name.ljust(18)]
        for key in SHORT:
            row.append(("yes" if rep[key].verdict else "no").rjust(8))
        print("".join(row))

    print("\nwitnesses for the fork with two sinks:")
    rep = classify_algebra(corpus()["sink_fork"])
    for res in rep.results:
        if not res.verdict:
            print(f"  {res.predicate}: {res.witness}")


if __name__ == "__main__":
    main()

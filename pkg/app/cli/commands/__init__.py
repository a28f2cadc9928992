"""
Subcommands

One module per subcommand, each exposing ``register(subparsers)``; the parser
it adds carries its handler as the ``handler`` default.

    sample          draw W-random posets to JSON files
    density         t, t_inj, t_ind or Monte-Carlo t between two poset files
    kernel-density  t(Q, W) for a named kernel
    check-kernel    sampled kernel-axiom check, optionally the poset-limit test
    classify        poset test of a digraph file, with a witness
    cutdist         cut-distance bounds between two step-function files
    converge        convergence series of P(n, W) towards W
    gnp-order       random graph orders and their 2-chain density
    thin            thinning of a kernel or of a poset file
"""

from app.cli.commands import (
    check_kernel,
    classify,
    converge,
    cutdist,
    density,
    gnp_order,
    kernel_density,
    sample,
    thin,
)

COMMANDS = (
    sample,
    density,
    kernel_density,
    check_kernel,
    classify,
    cutdist,
    converge,
    gnp_order,
    thin,
)

__all__ = ["COMMANDS"]

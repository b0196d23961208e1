import click

from .check import check
from .generate import generate
from .lagrangian import lagrangian
from .region import edlb, k43count, region
from .search import search
from .symmetrize import symmetrize
from .verify import verify_lemmas


def init_commands(app: click.Group) -> None:
    # Construction and membership
    app.add_command(generate)
    app.add_command(check)

    # Optimization
    app.add_command(lagrangian)
    app.add_command(symmetrize)
    app.add_command(search)

    # Feasible region
    app.add_command(region)
    app.add_command(k43count)
    app.add_command(edlb)

    app.add_command(verify_lemmas)

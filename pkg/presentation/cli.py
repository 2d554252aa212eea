import sys
from typing import Optional

import click

from application.jobs import JobOptions, JobRunner, JobSpec
from infrastructure.adapters import RENDERERS, renderer_for
from infrastructure.group_repo import JsonGroupRepository
from infrastructure.logger import extlift_logger
from infrastructure.settings import load_bounds

GROUP_HELP = "Group JSON file, or catalog:<expr> such as catalog:dihedral(8)."
SUBGROUP_HELP = "center | derived | sylow:p | gens:a,b | member list a,b,c | JSON file."
AUTOMORPHISM_HELP = "identity | inversion | power:r | inner:g | index:i | images:... | gens:a->b,..."


def build_runner() -> JobRunner:
    return JobRunner(repository_factory=JsonGroupRepository, bounds_loader=load_bounds)


def emit(report, fmt: str, output: Optional[str]) -> None:
    payload = renderer_for(fmt).render(report)
    if output:
        with open(output, 'wb') as f:
            f.write(payload)
    else:
        click.get_binary_stream('stdout').write(payload)


def common_options(func):
    """Output, bounds and logging flags shared by every command."""
    options = [
        click.option('--format', 'fmt', type=click.Choice(sorted(RENDERERS)), default='json', show_default=True),
        click.option('--output', '-o', type=click.Path(dir_okay=False), default=None, help="Write the report here."),
        click.option('--seed', type=click.IntRange(min=0), default=None, help="Seed for randomized checks."),
        click.option('--max-order', type=click.IntRange(min=1), default=None, help="Override the group order bound."),
        click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
                     help="Bounds file; defaults to $EXTLIFT_CONFIG_PATH, then config/bounds.json."),
        click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
                     default=None, help="Diagnostics go to stderr."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run_job(command: str, fmt: str, output: Optional[str], log_level: Optional[str], **fields) -> None:
    if log_level:
        extlift_logger.set_level(log_level)
    option_keys = set(JobOptions.model_fields)
    options = JobOptions(**{k: v for k, v in fields.items() if k in option_keys and v is not None})
    spec = JobSpec(command=command, options=options,
                   **{k: v for k, v in fields.items() if k not in option_keys})
    result = build_runner().run(spec)
    emit(result.report, fmt, output)
    sys.exit(result.exit_code)


@click.group()
@click.version_option(package_name="extlift")
def cli():
    """Extend and lift automorphisms through abelian group extensions 1 -> N -> G -> G/N -> 1."""


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--subgroup', required=True, help=SUBGROUP_HELP)
@common_options
def analyze(group, subgroup, fmt, output, seed, max_order, config_path, log_level):
    """H^2, C1, C2, which of them extend or lift, and the exactness checks."""
    run_job("analyze", fmt, output, log_level, group=group, subgroup=subgroup,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--coeffs', required=True, help="Abelian coefficient group, same forms as --group.")
@click.option('--action', type=click.Choice(['trivial']), default='trivial', show_default=True)
@common_options
def h2(group, coeffs, action, fmt, output, seed, max_order, config_path, log_level):
    """Orders of Z^2, B^2, H^2 and Z^1 with trivial action."""
    run_job("h2", fmt, output, log_level, group=group, coeffs=coeffs, action=action,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--subgroup', required=True, help=SUBGROUP_HELP)
@click.option('--theta', required=True, help="Automorphism of N (local numbering). " + AUTOMORPHISM_HELP)
@common_options
def extend(group, subgroup, theta, fmt, output, seed, max_order, config_path, log_level):
    """Extend theta in Aut(N) to G, inducing the identity on G/N."""
    run_job("extend", fmt, output, log_level, group=group, subgroup=subgroup, theta=theta,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--subgroup', required=True, help=SUBGROUP_HELP)
@click.option('--phi', required=True, help="Automorphism of G/N. " + AUTOMORPHISM_HELP)
@common_options
def lift(group, subgroup, phi, fmt, output, seed, max_order, config_path, log_level):
    """Lift phi in Aut(G/N) to G, centralizing N."""
    run_job("lift", fmt, output, log_level, group=group, subgroup=subgroup, phi=phi,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command(name="lift-pair")
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--subgroup', required=True, help=SUBGROUP_HELP)
@click.option('--theta', required=True, help="Automorphism of N. " + AUTOMORPHISM_HELP)
@click.option('--phi', required=True, help="Automorphism of G/N. " + AUTOMORPHISM_HELP)
@common_options
def lift_pair(group, subgroup, theta, phi, fmt, output, seed, max_order, config_path, log_level):
    """Realize (theta, phi) by one automorphism of G."""
    run_job("lift-pair", fmt, output, log_level, group=group, subgroup=subgroup, theta=theta, phi=phi,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--subgroup', required=True, help=SUBGROUP_HELP)
@click.option('--phi', default=None, help="Automorphism of G/N to lift. " + AUTOMORPHISM_HELP)
@click.option('--theta', default=None, help="Automorphism of N; alone it selects the extension check.")
@common_options
def sylow(group, subgroup, phi, theta, fmt, output, seed, max_order, config_path, log_level):
    """Decide a lift or extension one Sylow preimage at a time."""
    run_job("sylow", fmt, output, log_level, group=group, subgroup=subgroup, phi=phi, theta=theta,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--subgroup', required=True, help=SUBGROUP_HELP)
@click.option('--search/--no-search', default=True, show_default=True,
              help="Search for sections when the extension does not split.")
@common_options
def split(group, subgroup, search, fmt, output, seed, max_order, config_path, log_level):
    """Splitting of the extension and of the Wells sequences."""
    run_job("split", fmt, output, log_level, group=group, subgroup=subgroup, search=search,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@click.option('--subgroup', required=True, help=SUBGROUP_HELP)
@common_options
def verify(group, subgroup, fmt, output, seed, max_order, config_path, log_level):
    """Exactness, derivation identities and transversal independence."""
    run_job("verify", fmt, output, log_level, group=group, subgroup=subgroup,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command()
@click.option('--group', required=True, help=GROUP_HELP)
@common_options
def catalog(group, fmt, output, seed, max_order, config_path, log_level):
    """Invariants of a group and its abelian normal subgroups."""
    run_job("catalog", fmt, output, log_level, group=group,
            seed=seed, max_order=max_order, config_path=config_path)


@cli.command(name="verify-all")
@click.argument('directory', type=click.Path(file_okay=False))
@common_options
def verify_all(directory, fmt, output, seed, max_order, config_path, log_level):
    """Run verify on every abelian normal subgroup of every group in DIRECTORY."""
    run_job("verify-all", fmt, output, log_level, directory=directory,
            seed=seed, max_order=max_order, config_path=config_path)

from approx_veb.cli import cli

cli()

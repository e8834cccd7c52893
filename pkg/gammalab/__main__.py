from gammalab import create_cli

create_cli()(prog_name="gammalab")

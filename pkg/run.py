from gammalab import create_cli # import create_cli function from gammalab/__init__.py

cli = create_cli() # new command group object

if __name__ == "__main__":
    cli(prog_name="gammalab")

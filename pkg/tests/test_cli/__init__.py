# Command-line interface tests

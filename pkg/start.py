"""
Delegates to the command line module to start the program.

This is done so custom bootstrapping logic can be separated from the command line front end.
"""
import geocount.cli as cli

cli.main()

""" oscsphere/__main__.py """

# Oscsphere
from oscsphere.cli import main

raise SystemExit(main())

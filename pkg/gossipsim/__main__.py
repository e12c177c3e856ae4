# -*- coding: utf-8 -*-
#

# Imports
import sys
from gossipsim.cli.main import main

sys.exit(main())

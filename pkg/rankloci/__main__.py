'''Run the command line interface.

$ python -m rankloci table --n 7 --corners 1
'''
import sys

from rankloci.cli import main


if __name__ == '__main__':
    sys.exit(main())

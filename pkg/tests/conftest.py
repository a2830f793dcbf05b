# keeps the tests directory on sys.path so goldens.py imports everywhere

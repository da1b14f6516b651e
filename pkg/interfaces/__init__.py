"""
Interfaces package
------------------
Outer surfaces of massbound; currently the command-line front end.
"""

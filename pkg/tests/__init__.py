"""
Test suites for massbound
"""

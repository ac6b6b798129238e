"""
Test package for censored-extremes
"""

def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)
def verdict(checks):
    if all(checks):
        return True
    else:
        print('some checks failed')
        return False

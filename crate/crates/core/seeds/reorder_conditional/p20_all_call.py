def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def verdict(checks):
    if not all(checks):
        print('some checks failed')
        return False
    else:
        return True
# probe: verdict([True, True])
# probe: verdict([True, False])

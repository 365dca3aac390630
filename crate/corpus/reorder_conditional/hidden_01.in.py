def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def describe_value(v):
    if not v is None:
        return 'value ' + str(v)
    else:
        return 'nothing'
# probe: describe_value(3)
# probe: describe_value(None)

def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def filter_if(values, enabled):
    if enabled:
        result = [v for v in values if v != 0]
        return result
    return values

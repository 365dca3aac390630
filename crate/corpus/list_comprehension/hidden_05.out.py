def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown
def absolute(values):
    mags = [abs(v) for v in values]
    return max(mags)

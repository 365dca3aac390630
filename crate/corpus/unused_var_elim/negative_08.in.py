def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def gate(x):
    if x > 0 and False:
        return 'never'
    return 'always'
# probe: gate(5)

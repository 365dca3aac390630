def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def average(values):
    if False and len(values) > 100:
        print('large input')
    if len(values) == 0:
        return 0
    return sum(values) // len(values)
# probe: average([2, 4, 9])
# probe: average([])

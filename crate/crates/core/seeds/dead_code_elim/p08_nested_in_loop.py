def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def find(values, target):
    for k in range(len(values)):
        if values[k] == target:
            if None:
                print('found at', k)
            return k
    return -1
# probe: find([4, 5, 6], 5)
# probe: find([4, 5, 6], 9)

def value_span(values):
    if len(values) < 2:
        return 0
    return max(values) - min(values)

def count_vowels(word):
    count = 0
    for ch in word.lower():
        if ch in 'aeiou':
            count = count + 1
        else:
            count = count + 0
    return count
# probe: count_vowels('Education')
# probe: count_vowels('rhythm')

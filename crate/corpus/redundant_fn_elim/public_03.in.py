def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

def notify():
    pass

count = 3
notify()
count = count * 2
notify()
print(count)

package zoo.core;

/**
 * Base type for every creature the shelter tracks.
 */
public abstract class Animal {
    protected String name;
    protected int age;
    private Mood mood;

    public Animal(String name, int age) {
        this.name = name;
        this.age = age;
        this.mood = Mood.CALM;
    }

    // Elders get an honorific suffix.
    public String describe() {
        if (age > 10 && name != null) {
            return name + " the elder";
        }
        return name;
    }

    public Mood mood() {
        return mood;
    }

    public void calm(Mood next) {
        this.mood = next;
    }

    public abstract String sound();
}
